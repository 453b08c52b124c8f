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

// Comment-tree ingestion and dataset construction: parsing scraped comment
// trees, flattening, de-duplication, labeling, class balancing, splitting,
// and lexicon flagging.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "modkit/error.hpp"
#include "modkit/random.hpp"
#include "modkit/utf8.hpp"

namespace modkit::corpus {

struct Comment {
  std::string id;
  std::string author;
  std::string text;
  std::optional<std::string> timestamp;
  std::size_t depth = 0;

  bool operator==(const Comment&) const = default;
};

struct CommentNode {
  Comment comment;
  std::vector<CommentNode> children;

  bool operator==(const CommentNode&) const = default;
};

struct CommentTree {
  std::string post_id;
  std::string post_author;
  std::vector<CommentNode> roots;

  bool operator==(const CommentTree&) const = default;

  std::size_t node_count() const {
    std::size_t n = 0;
    std::vector<const CommentNode*> stack;
    for (const auto& r : roots) stack.push_back(&r);
    while (!stack.empty()) {
      const auto* node = stack.back();
      stack.pop_back();
      ++n;
      for (const auto& c : node->children) stack.push_back(&c);
    }
    return n;
  }
};

enum class Label : std::uint8_t { NotOffensive = 0, Offensive = 1 };

constexpr std::string_view to_string(Label l) {
  return l == Label::Offensive ? "Offensive" : "NotOffensive";
}

/// The three rules annotators applied. Carried as metadata with every
/// labeling session and every dataset file written by the tools.
inline constexpr std::array<std::string_view, 3> k_annotation_criteria = {
    "Insults or threats targeted towards an individual or a group",
    "Inappropriate or vulgar language",
    "Targeting of a person or group based on identity (race, religion, gender, sexuality, disability)",
};

struct LabeledEntry {
  std::string comment_id;
  std::string text;
  Label label = Label::NotOffensive;

  bool operator==(const LabeledEntry&) const = default;
};

/// Flat labeled comments. Ids are unique; class counts are maintained on
/// construction.
class LabeledDataset {
 public:
  LabeledDataset() = default;

  explicit LabeledDataset(std::vector<LabeledEntry> entries,
                          std::map<std::string, std::string> provenance = {})
      : entries_(std::move(entries)), provenance_(std::move(provenance)) {
    std::unordered_set<std::string_view> seen;
    seen.reserve(entries_.size());
    for (const auto& e : entries_) {
      if (!seen.insert(e.comment_id).second) {
        throw Error(ErrorCode::DuplicateId, "comment id '" + e.comment_id + "' appears twice");
      }
      if (e.label == Label::Offensive) ++offensive_;
    }
  }

  const std::vector<LabeledEntry>& entries() const noexcept { return entries_; }
  const std::map<std::string, std::string>& provenance() const noexcept { return provenance_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t offensive_count() const noexcept { return offensive_; }
  std::size_t not_offensive_count() const noexcept { return entries_.size() - offensive_; }

  /// Entries whose id is in `ids`, in dataset order, with provenance kept.
  LabeledDataset subset(const std::unordered_set<std::string>& ids) const {
    std::vector<LabeledEntry> kept;
    std::map<std::string, std::string> prov;
    for (const auto& e : entries_) {
      if (!ids.contains(e.comment_id)) continue;
      kept.push_back(e);
      if (auto it = provenance_.find(e.comment_id); it != provenance_.end()) prov.insert(*it);
    }
    return LabeledDataset(std::move(kept), std::move(prov));
  }

  bool operator==(const LabeledDataset& o) const {
    return entries_ == o.entries_ && provenance_ == o.provenance_;
  }

 private:
  std::vector<LabeledEntry> entries_;
  std::map<std::string, std::string> provenance_;
  std::size_t offensive_ = 0;
};

// ---------------------------------------------------------------------------
// Comment-tree JSON

namespace detail {

inline const nlohmann::json& require(const nlohmann::json& obj, const char* key,
                                     const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error(ErrorCode::SchemaViolation, path + "." + key + " is missing");
  }
  return *it;
}

inline std::string require_string(const nlohmann::json& obj, const char* key,
                                  const std::string& path) {
  const auto& v = require(obj, key, path);
  if (!v.is_string()) throw Error(ErrorCode::SchemaViolation, path + "." + key + " must be a string");
  return v.get<std::string>();
}

inline std::string optional_string(const nlohmann::json& obj, const char* key,
                                   const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return {};
  if (!it->is_string()) throw Error(ErrorCode::SchemaViolation, path + "." + key + " must be a string");
  return it->get<std::string>();
}

inline void parse_comments(const nlohmann::json& arr, const std::string& path, std::size_t depth,
                           std::unordered_set<std::string>& ids,
                           std::vector<CommentNode>& out) {
  if (!arr.is_array()) throw Error(ErrorCode::SchemaViolation, path + " must be an array");
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto here = path + "[" + std::to_string(i) + "]";
    const auto& obj = arr[i];
    if (!obj.is_object()) throw Error(ErrorCode::SchemaViolation, here + " must be an object");
    CommentNode node;
    node.comment.id = require_string(obj, "id", here);
    if (node.comment.id.empty()) throw Error(ErrorCode::SchemaViolation, here + ".id is empty");
    node.comment.text = require_string(obj, "text", here);
    node.comment.author = optional_string(obj, "author", here);
    if (auto it = obj.find("timestamp"); it != obj.end() && !it->is_null()) {
      if (!it->is_string()) throw Error(ErrorCode::SchemaViolation, here + ".timestamp must be a string");
      node.comment.timestamp = it->get<std::string>();
    }
    node.comment.depth = depth;
    if (!ids.insert(node.comment.id).second) {
      throw Error(ErrorCode::DuplicateId, "comment id '" + node.comment.id + "' at " + here);
    }
    if (auto it = obj.find("replies"); it != obj.end() && !it->is_null()) {
      parse_comments(*it, here + ".replies", depth + 1, ids, node.children);
    }
    out.push_back(std::move(node));
  }
}

inline nlohmann::json to_json(const CommentNode& node) {
  nlohmann::json obj = {{"id", node.comment.id},
                        {"author", node.comment.author},
                        {"text", node.comment.text}};
  if (node.comment.timestamp) obj["timestamp"] = *node.comment.timestamp;
  auto replies = nlohmann::json::array();
  for (const auto& c : node.children) replies.push_back(to_json(c));
  obj["replies"] = std::move(replies);
  return obj;
}

}  // namespace detail

/// Parses one scraped post: `{post_id, post_author, comments: [...]}` where
/// each comment is `{id, author, text, timestamp?, replies: [...]}`.
inline CommentTree parse_comment_tree(std::string_view json_bytes) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedJson,
                "at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::SchemaViolation, "$ must be an object");
  CommentTree tree;
  tree.post_id = detail::require_string(doc, "post_id", "$");
  tree.post_author = detail::optional_string(doc, "post_author", "$");
  std::unordered_set<std::string> ids;
  detail::parse_comments(detail::require(doc, "comments", "$"), "$.comments", 0, ids, tree.roots);
  return tree;
}

inline std::string serialize_comment_tree(const CommentTree& tree, int indent = -1) {
  nlohmann::json doc = {{"post_id", tree.post_id}, {"post_author", tree.post_author}};
  auto comments = nlohmann::json::array();
  for (const auto& r : tree.roots) comments.push_back(detail::to_json(r));
  doc["comments"] = std::move(comments);
  return doc.dump(indent);
}

/// Pre-order walk: parents before children, siblings in stored order.
inline std::vector<Comment> flatten(const CommentTree& tree) {
  std::vector<Comment> out;
  std::vector<const CommentNode*> stack;
  for (auto it = tree.roots.rbegin(); it != tree.roots.rend(); ++it) stack.push_back(&*it);
  while (!stack.empty()) {
    const auto* node = stack.back();
    stack.pop_back();
    out.push_back(node->comment);
    for (auto it = node->children.rbegin(); it != node->children.rend(); ++it) stack.push_back(&*it);
  }
  return out;
}

/// Strips leading and trailing Unicode whitespace.
inline std::string_view trim(std::string_view s) {
  const auto cps = utf8::decode(s);
  std::size_t begin_cp = 0;
  std::size_t end_cp = cps.size();
  while (begin_cp < end_cp && utf8::is_whitespace(cps[begin_cp])) ++begin_cp;
  while (end_cp > begin_cp && utf8::is_whitespace(cps[end_cp - 1])) --end_cp;
  // Map code point positions back to bytes.
  std::size_t pos = 0;
  std::size_t begin_byte = 0;
  std::size_t end_byte = 0;
  for (std::size_t i = 0; i <= cps.size(); ++i) {
    if (i == begin_cp) begin_byte = pos;
    if (i == end_cp) end_byte = pos;
    if (i < cps.size()) utf8::next(s, pos);
  }
  return s.substr(begin_byte, end_byte - begin_byte);
}

/// Keeps the first comment for each whitespace-trimmed text; stable.
inline std::vector<Comment> dedupe(const std::vector<Comment>& comments) {
  std::vector<Comment> out;
  std::unordered_set<std::string> seen;
  for (const auto& c : comments) {
    if (seen.insert(std::string(trim(c.text))).second) out.push_back(c);
  }
  return out;
}

struct LabelingResult {
  LabeledDataset dataset;
  std::size_t unlabeled = 0;
  std::span<const std::string_view> criteria = k_annotation_criteria;
};

/// Joins comments with their manual labels. Comments without a label are
/// left out (and counted), never defaulted to NotOffensive.
inline LabelingResult apply_labels(const std::vector<Comment>& comments,
                                   const std::map<std::string, Label>& labels,
                                   const std::map<std::string, std::string>& provenance = {}) {
  std::unordered_set<std::string_view> present;
  for (const auto& c : comments) present.insert(c.id);
  for (const auto& [id, _] : labels) {
    if (!present.contains(id)) {
      throw Error(ErrorCode::UnknownCommentId, "label references unknown comment '" + id + "'");
    }
  }
  std::vector<LabeledEntry> entries;
  std::map<std::string, std::string> prov;
  std::size_t unlabeled = 0;
  for (const auto& c : comments) {
    auto it = labels.find(c.id);
    if (it == labels.end()) {
      ++unlabeled;
      continue;
    }
    entries.push_back({c.id, c.text, it->second});
    if (auto p = provenance.find(c.id); p != provenance.end()) prov.insert(*p);
  }
  return {LabeledDataset(std::move(entries), std::move(prov)), unlabeled, k_annotation_criteria};
}

/// Label file: JSON object mapping comment id to 0 (NotOffensive) or 1 (Offensive).
inline std::map<std::string, Label> parse_label_file(std::string_view json_bytes) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedJson, "at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::SchemaViolation, "label file must be an object");
  std::map<std::string, Label> out;
  for (const auto& [id, v] : doc.items()) {
    if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1)) {
      throw Error(ErrorCode::SchemaViolation, "$." + id + " must be 0 or 1");
    }
    out.emplace(id, v.get<int>() == 1 ? Label::Offensive : Label::NotOffensive);
  }
  return out;
}

namespace detail {

inline std::vector<std::string> sorted_ids(const std::vector<const LabeledEntry*>& entries) {
  std::vector<std::string> ids;
  ids.reserve(entries.size());
  for (const auto* e : entries) ids.push_back(e->comment_id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace detail

/// Undersamples the majority class to the minority count. The majority ids
/// are sorted, shuffled with splitmix64(seed), and the first `minority`
/// of them are kept. Output keeps the input order.
inline LabeledDataset balance(const LabeledDataset& dataset, std::uint64_t seed) {
  if (dataset.offensive_count() == 0 || dataset.not_offensive_count() == 0) {
    throw Error(ErrorCode::EmptyClass, "balancing needs both classes (offensive=" +
                                           std::to_string(dataset.offensive_count()) +
                                           ", not offensive=" +
                                           std::to_string(dataset.not_offensive_count()) + ")");
  }
  const Label majority = dataset.offensive_count() > dataset.not_offensive_count()
                             ? Label::Offensive
                             : Label::NotOffensive;
  const std::size_t keep = std::min(dataset.offensive_count(), dataset.not_offensive_count());

  std::vector<const LabeledEntry*> major;
  std::unordered_set<std::string> selected;
  for (const auto& e : dataset.entries()) {
    if (e.label == majority) {
      major.push_back(&e);
    } else {
      selected.insert(e.comment_id);
    }
  }
  auto ids = detail::sorted_ids(major);
  SplitMix64 rng(seed);
  shuffle(std::span<std::string>(ids), rng);
  for (std::size_t i = 0; i < keep; ++i) selected.insert(ids[i]);
  return dataset.subset(selected);
}

struct SplitRatios {
  double train = 0.8;
  double validation = 0.1;
  double test = 0.1;
};

struct DatasetSplit {
  LabeledDataset train;
  LabeledDataset validation;
  LabeledDataset test;
};

/// Piece sizes for `n` items: validation and test get floor(n * ratio), the
/// remainder goes to train.
inline std::array<std::size_t, 3> split_sizes(std::size_t n, const SplitRatios& r) {
  const double parts[] = {r.train, r.validation, r.test};
  double sum = 0;
  for (double p : parts) {
    if (!std::isfinite(p) || p < 0) throw Error(ErrorCode::BadRatios, "ratios must be non-negative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::BadRatios, "ratios sum to " + std::to_string(sum) + ", expected 1");
  }
  // The epsilon absorbs representation error such as 0.7 * 10 = 7.000000000000001.
  const auto floor_part = [n](double ratio) {
    return static_cast<std::size_t>(std::floor(static_cast<double>(n) * ratio + 1e-9));
  };
  const std::size_t val = floor_part(r.validation);
  const std::size_t test = floor_part(r.test);
  return {n - val - test, val, test};
}

inline DatasetSplit split(const LabeledDataset& dataset, const SplitRatios& ratios,
                          std::uint64_t seed) {
  const auto sizes = split_sizes(dataset.size(), ratios);
  std::vector<std::string> ids;
  ids.reserve(dataset.size());
  for (const auto& e : dataset.entries()) ids.push_back(e.comment_id);
  std::sort(ids.begin(), ids.end());
  SplitMix64 rng(seed);
  shuffle(std::span<std::string>(ids), rng);

  std::array<std::unordered_set<std::string>, 3> pieces;
  std::size_t offset = 0;
  for (std::size_t p = 0; p < 3; ++p) {
    for (std::size_t i = 0; i < sizes[p]; ++i) pieces[p].insert(ids[offset + i]);
    offset += sizes[p];
  }
  return {dataset.subset(pieces[0]), dataset.subset(pieces[1]), dataset.subset(pieces[2])};
}

// ---------------------------------------------------------------------------
// Lexicon

enum class LexiconCategory : std::uint8_t { Discriminatory, Derogatory, Threatening, Watchword };

constexpr std::string_view to_string(LexiconCategory c) {
  switch (c) {
    case LexiconCategory::Discriminatory: return "discriminatory";
    case LexiconCategory::Derogatory: return "derogatory";
    case LexiconCategory::Threatening: return "threatening";
    case LexiconCategory::Watchword: return "watchword";
  }
  return "";
}

inline std::optional<LexiconCategory> parse_category(std::string_view s) {
  for (auto c : {LexiconCategory::Discriminatory, LexiconCategory::Derogatory,
                 LexiconCategory::Threatening, LexiconCategory::Watchword}) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

struct LexiconEntry {
  std::string term;
  LexiconCategory category = LexiconCategory::Derogatory;

  bool operator==(const LexiconEntry&) const = default;
};

struct LexiconHit {
  std::string term;
  LexiconCategory category;

  bool operator==(const LexiconHit&) const = default;
};

/// Lexicon file: `term<TAB>category` lines. Blank lines and `#` comments are
/// skipped; terms are lowercased on load.
inline std::vector<LexiconEntry> parse_lexicon(std::string_view text) {
  std::vector<LexiconEntry> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorCode::SchemaViolation, "lexicon line " + std::to_string(line_no) + ": expected term<TAB>category");
    }
    auto term = utf8::to_lower(trim(line.substr(0, tab)));
    const auto cat = parse_category(trim(line.substr(tab + 1)));
    if (term.empty() || !cat) {
      throw Error(ErrorCode::SchemaViolation, "lexicon line " + std::to_string(line_no) + ": bad term or category");
    }
    out.push_back({std::move(term), *cat});
  }
  return out;
}

namespace detail {

inline bool is_word_char(char32_t cp) {
  if (cp < 0x80) return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
  return !utf8::is_whitespace(cp) && !utf8::is_punct(cp) && !utf8::is_emoji(cp) &&
         !utf8::is_emoji_modifier(cp) && cp != utf8::k_zwj;
}

/// Lowercased alphanumeric runs.
inline std::vector<std::string> words(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (std::size_t pos = 0; pos < text.size();) {
    const char32_t cp = utf8::next(text, pos);
    if (is_word_char(cp)) {
      utf8::append(cur, utf8::to_lower(cp));
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace detail

/// Case-insensitive whole-word lexicon matching. Multi-word terms match a
/// contiguous run of words. Each distinct term is reported once per comment,
/// in lexicon order; comments without hits are absent from the result.
inline std::map<std::string, std::vector<LexiconHit>> lexicon_flag(
    const std::vector<Comment>& comments, const std::vector<LexiconEntry>& lexicon) {
  std::map<std::string, std::vector<LexiconHit>> out;
  if (lexicon.empty()) return out;
  std::vector<std::vector<std::string>> term_words;
  term_words.reserve(lexicon.size());
  for (const auto& e : lexicon) term_words.push_back(detail::words(e.term));

  for (const auto& c : comments) {
    const auto ws = detail::words(c.text);
    std::vector<LexiconHit> hits;
    std::set<std::string_view> reported;
    for (std::size_t t = 0; t < lexicon.size(); ++t) {
      const auto& tw = term_words[t];
      if (tw.empty() || tw.size() > ws.size() || reported.contains(lexicon[t].term)) continue;
      for (std::size_t i = 0; i + tw.size() <= ws.size(); ++i) {
        if (std::equal(tw.begin(), tw.end(), ws.begin() + static_cast<std::ptrdiff_t>(i))) {
          hits.push_back({lexicon[t].term, lexicon[t].category});
          reported.insert(lexicon[t].term);
          break;
        }
      }
    }
    if (!hits.empty()) out.emplace(c.id, std::move(hits));
  }
  return out;
}

}  // namespace modkit::corpus
