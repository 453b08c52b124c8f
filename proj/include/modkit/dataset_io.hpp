/*
 * Copyright 2026 The modkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Dataset files written by `modkit ingest` and `modkit balance`:
//
//   {"annotation_criteria": [...],
//    "entries": [{"id", "text", "post_id", "label"?: 0|1, "lexicon"?: [...]}]}
//
// Entries without a label are unlabeled comments; training requires labels.

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "modkit/corpus.hpp"
#include "modkit/error.hpp"

namespace modkit::io {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Writes via a temporary file and rename, so readers never see a partial file.
inline void write_file_atomic(const std::string& path, std::string_view content) {
  const auto tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot move '" + tmp + "' to '" + path + "': " + ec.message());
}

inline nlohmann::json parse_json(std::string_view text, const std::string& origin) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedJson, origin + " at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

inline nlohmann::json read_json(const std::string& path) { return parse_json(read_file(path), path); }

struct DatasetRecord {
  std::string id;
  std::string text;
  std::string post_id;
  std::optional<corpus::Label> label;
  std::vector<corpus::LexiconHit> lexicon;

  bool operator==(const DatasetRecord&) const = default;
};

inline std::string dataset_to_string(const std::vector<DatasetRecord>& records) {
  nlohmann::json criteria = nlohmann::json::array();
  for (auto c : corpus::k_annotation_criteria) criteria.push_back(std::string(c));
  auto entries = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json e = {{"id", r.id}, {"text", r.text}, {"post_id", r.post_id}};
    if (r.label) e["label"] = static_cast<int>(*r.label);
    if (!r.lexicon.empty()) {
      auto hits = nlohmann::json::array();
      for (const auto& h : r.lexicon) hits.push_back({{"term", h.term}, {"category", to_string(h.category)}});
      e["lexicon"] = std::move(hits);
    }
    entries.push_back(std::move(e));
  }
  return nlohmann::json{{"annotation_criteria", std::move(criteria)}, {"entries", std::move(entries)}}.dump(1) + "\n";
}

inline std::vector<DatasetRecord> dataset_from_json(const nlohmann::json& doc, const std::string& origin) {
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
    throw Error(ErrorCode::SchemaViolation, origin + ": expected an object with an 'entries' array");
  }
  std::vector<DatasetRecord> out;
  out.reserve(doc["entries"].size());
  std::size_t i = 0;
  for (const auto& e : doc["entries"]) {
    const auto where = origin + ": entries[" + std::to_string(i++) + "]";
    try {
      DatasetRecord r;
      r.id = e.at("id").get<std::string>();
      r.text = e.at("text").get<std::string>();
      r.post_id = e.value("post_id", std::string{});
      if (auto it = e.find("label"); it != e.end() && !it->is_null()) {
        const int v = it->get<int>();
        if (v != 0 && v != 1) throw Error(ErrorCode::SchemaViolation, where + ".label must be 0 or 1");
        r.label = v == 1 ? corpus::Label::Offensive : corpus::Label::NotOffensive;
      }
      if (auto it = e.find("lexicon"); it != e.end()) {
        for (const auto& h : *it) {
          const auto cat = corpus::parse_category(h.at("category").get<std::string>());
          if (!cat) throw Error(ErrorCode::SchemaViolation, where + ": bad lexicon category");
          r.lexicon.push_back({h.at("term").get<std::string>(), *cat});
        }
      }
      out.push_back(std::move(r));
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorCode::SchemaViolation, where + ": " + ex.what());
    }
  }
  return out;
}

inline std::vector<DatasetRecord> read_dataset(const std::string& path) {
  return dataset_from_json(read_json(path), path);
}

inline void write_dataset(const std::string& path, const std::vector<DatasetRecord>& records) {
  write_file_atomic(path, dataset_to_string(records));
}

/// Labeled view of the records; every record must carry a label.
inline corpus::LabeledDataset to_labeled(const std::vector<DatasetRecord>& records) {
  std::vector<corpus::LabeledEntry> entries;
  std::map<std::string, std::string> provenance;
  entries.reserve(records.size());
  for (const auto& r : records) {
    if (!r.label) throw Error(ErrorCode::SchemaViolation, "entry '" + r.id + "' has no label");
    entries.push_back({r.id, r.text, *r.label});
    if (!r.post_id.empty()) provenance.emplace(r.id, r.post_id);
  }
  return corpus::LabeledDataset(std::move(entries), std::move(provenance));
}

/// Records restricted to a labeled subset, keeping the subset's order.
inline std::vector<DatasetRecord> select(const std::vector<DatasetRecord>& records,
                                         const corpus::LabeledDataset& subset) {
  std::unordered_map<std::string, const DatasetRecord*> by_id;
  for (const auto& r : records) by_id.emplace(r.id, &r);
  std::vector<DatasetRecord> out;
  out.reserve(subset.size());
  for (const auto& e : subset.entries()) out.push_back(*by_id.at(e.comment_id));
  return out;
}

/// 64-bit FNV-1a, hex encoded.
inline std::string fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace modkit::io
