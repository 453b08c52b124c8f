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

// Unigram TF-IDF featurization.
//
//   idf(t) = ln((1 + N) / (1 + df(t))) + 1
//   x_t    = count(t) * idf(t), then L2-normalised
//
// Vocabulary indices follow first appearance in the fitting corpus.

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "modkit/error.hpp"
#include "modkit/textprep.hpp"

namespace modkit::vectorize {

/// Sorted (index, weight) pairs with strictly increasing indices.
struct SparseVector {
  std::vector<std::pair<std::uint32_t, double>> entries;

  bool empty() const noexcept { return entries.empty(); }
  std::size_t size() const noexcept { return entries.size(); }

  double norm() const {
    double s = 0;
    for (const auto& [_, w] : entries) s += w * w;
    return std::sqrt(s);
  }

  bool operator==(const SparseVector&) const = default;
};

class TfidfModel {
 public:
  TfidfModel() = default;

  /// Builds a model from explicit terms (index = position) and idf values.
  TfidfModel(std::vector<std::string> terms, std::vector<double> idf, std::size_t doc_count)
      : terms_(std::move(terms)), idf_(std::move(idf)), doc_count_(doc_count) {
    if (terms_.size() != idf_.size()) throw Error(ErrorCode::SchemaViolation, "terms/idf length mismatch");
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (!index_.emplace(terms_[i], static_cast<std::uint32_t>(i)).second) {
        throw Error(ErrorCode::DuplicateId, "term '" + terms_[i] + "' appears twice in the vocabulary");
      }
    }
  }

  static TfidfModel fit(std::span<const textprep::TokenStream> corpus) {
    if (corpus.empty()) throw Error(ErrorCode::EmptyCorpus, "cannot fit TF-IDF on an empty corpus");
    std::vector<std::string> terms;
    std::unordered_map<std::string, std::uint32_t> index;
    std::vector<std::size_t> df;
    std::unordered_set<std::uint32_t> seen_in_doc;
    for (const auto& doc : corpus) {
      seen_in_doc.clear();
      for (const auto& tok : doc.tokens) {
        auto [it, inserted] = index.emplace(tok, static_cast<std::uint32_t>(terms.size()));
        if (inserted) {
          terms.push_back(tok);
          df.push_back(0);
        }
        if (seen_in_doc.insert(it->second).second) ++df[it->second];
      }
    }
    const double n = static_cast<double>(corpus.size());
    std::vector<double> idf(df.size());
    for (std::size_t i = 0; i < df.size(); ++i) {
      idf[i] = std::log((1.0 + n) / (1.0 + static_cast<double>(df[i]))) + 1.0;
    }
    return TfidfModel(std::move(terms), std::move(idf), corpus.size());
  }

  SparseVector transform(const textprep::TokenStream& doc) const {
    std::unordered_map<std::uint32_t, std::size_t> tf;
    for (const auto& tok : doc.tokens) {
      if (auto it = index_.find(tok); it != index_.end()) ++tf[it->second];
    }
    SparseVector v;
    v.entries.reserve(tf.size());
    for (const auto& [i, c] : tf) v.entries.emplace_back(i, static_cast<double>(c) * idf_[i]);
    std::sort(v.entries.begin(), v.entries.end());
    const double norm = v.norm();
    if (norm > 0) {
      for (auto& [_, w] : v.entries) w /= norm;
    }
    return v;
  }

  std::vector<SparseVector> transform(std::span<const textprep::TokenStream> docs) const {
    std::vector<SparseVector> out;
    out.reserve(docs.size());
    for (const auto& d : docs) out.push_back(transform(d));
    return out;
  }

  std::optional<std::uint32_t> index_of(const std::string& term) const {
    if (auto it = index_.find(term); it != index_.end()) return it->second;
    return std::nullopt;
  }

  double idf(std::uint32_t index) const { return idf_.at(index); }
  double idf(const std::string& term) const { return idf_.at(index_.at(term)); }
  std::size_t vocab_size() const noexcept { return terms_.size(); }
  std::size_t doc_count() const noexcept { return doc_count_; }
  const std::vector<std::string>& terms() const noexcept { return terms_; }

  /// `{doc_count, terms: [{term, index, idf}]}`
  nlohmann::json to_json() const {
    auto arr = nlohmann::json::array();
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      arr.push_back({{"term", terms_[i]}, {"index", i}, {"idf", idf_[i]}});
    }
    return {{"doc_count", doc_count_}, {"terms", std::move(arr)}};
  }

  static TfidfModel from_json(const nlohmann::json& j) {
    try {
      const auto& arr = j.at("terms");
      std::vector<std::string> terms(arr.size());
      std::vector<double> idf(arr.size());
      std::vector<bool> filled(arr.size(), false);
      for (const auto& t : arr) {
        const auto i = t.at("index").get<std::size_t>();
        if (i >= arr.size() || filled[i]) {
          throw Error(ErrorCode::SchemaViolation, "TF-IDF indices must be a contiguous range");
        }
        filled[i] = true;
        terms[i] = t.at("term").get<std::string>();
        idf[i] = t.at("idf").get<double>();
      }
      return TfidfModel(std::move(terms), std::move(idf), j.at("doc_count").get<std::size_t>());
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::SchemaViolation, std::string("TF-IDF model: ") + e.what());
    }
  }

 private:
  std::vector<std::string> terms_;
  std::vector<double> idf_;
  std::size_t doc_count_ = 0;
  std::unordered_map<std::string, std::uint32_t> index_;
};

}  // namespace modkit::vectorize
