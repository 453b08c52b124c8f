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

// Independent reference implementations and input generators shared by the
// unit tests and the acceptance runner. Nothing here calls the code under
// test except for plain data types.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "modkit/analytics.hpp"
#include "modkit/corpus.hpp"
#include "modkit/models.hpp"
#include "modkit/random.hpp"
#include "modkit/textprep.hpp"

namespace modkit::oracle {

/// Random token corpus over a small alphabet including non-ASCII tokens.
inline std::vector<textprep::TokenStream> random_corpus(SplitMix64& rng, std::size_t max_docs = 50,
                                                        std::size_t max_len = 20) {
  static const std::vector<std::string> words = {"a", "b", "c", "d", "the", "cat", "critical", "thinking",
                                                 "skills", "😂", "ünï"};
  std::vector<textprep::TokenStream> corpus(rng.below(max_docs + 1));
  for (auto& doc : corpus) {
    const auto len = rng.below(max_len + 1);
    for (std::size_t i = 0; i < len; ++i) doc.tokens.push_back(words[rng.below(words.size())]);
  }
  return corpus;
}

/// Window enumeration with grams kept as token vectors in an ordered map.
inline analytics::Ranked ngram_brute_force(const std::vector<textprep::TokenStream>& corpus, std::size_t n,
                                           std::size_t k) {
  std::map<std::vector<std::string>, std::size_t> counts;
  for (const auto& d : corpus) {
    if (d.tokens.size() < n) continue;
    for (std::size_t i = 0; i + n <= d.tokens.size(); ++i) {
      ++counts[std::vector<std::string>(d.tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                        d.tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
    }
  }
  analytics::Ranked rows;
  for (const auto& [gram, c] : counts) {
    std::string joined;
    for (std::size_t i = 0; i < gram.size(); ++i) joined += (i ? " " : "") + gram[i];
    rows.emplace_back(joined, c);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (rows.size() > k) rows.resize(k);
  return rows;
}

/// Random text built from fragments that exercise every preprocessing step.
inline std::string fuzz_text(SplitMix64& rng) {
  static const std::vector<std::string> fragments = {
      "Hello", "WORLD", "the", "The", "ur", "Im", "gonna", "cause", "writing", "cats", "boxes",
      "running", "hated", "y'all", "don't", "Karen", "ÉCOLE", "Straße", "日本", "!!!", "?", "...",
      ",", "\"", "(", ")", "#tag", "@user", "😂", "💀", "🤡", "🍌", "👍🏽", "❤️", "👨‍👩‍👧", "🫨",
      ":)", ":(", "XD", ":D", "<3", ":fire:", ":skull:", ":not_an_alias:", "::", ":", "_",
      "face_with_tears_of_joy", "a-b", "x_y", "1,000", "42", " ", "\t", "\n", "　",
      "​", "‍", "️", "ok", "lol", "LOL", "simp", "boomer", "cap"};
  std::string s;
  const auto n = rng.below(12);
  for (std::size_t i = 0; i < n; ++i) {
    s += fragments[rng.below(fragments.size())];
    if (rng.below(3) != 0) s += ' ';
  }
  return s;
}

/// Step sets listed in a deliberately non-canonical order.
inline textprep::PreprocessConfig config_from_mask(unsigned mask, textprep::EmojiMode mode) {
  using textprep::Step;
  static constexpr std::array<Step, 5> listing = {Step::PunctuationRemoval, Step::Lemmatization,
                                                  Step::StopwordRemoval, Step::EmojiEncoding,
                                                  Step::Lowercasing};
  std::vector<Step> steps;
  for (unsigned b = 0; b < 5; ++b) {
    if (mask & (1u << b)) steps.push_back(listing[b]);
  }
  return textprep::PreprocessConfig(steps, mode);
}

/// The pipeline written out step by step in canonical order.
inline textprep::TokenStream manual_pipeline(std::string_view text, const textprep::PreprocessConfig& c,
                                             const textprep::Resources& res = textprep::Resources::bundled()) {
  using namespace textprep;
  std::string normalized(text);
  if (c.has(Step::EmojiEncoding)) normalized = normalize_emoticons(text, res.emoticons);
  auto s = tokenize(normalized, {}, res.emojis);
  if (c.has(Step::Lowercasing)) s = lowercase(std::move(s));
  if (c.has(Step::EmojiEncoding)) s = encode_emojis(std::move(s), c.emoji_mode(), res.emojis);
  if (c.has(Step::PunctuationRemoval)) s = remove_punctuation(std::move(s), res.emojis);
  if (c.has(Step::StopwordRemoval)) s = remove_stopwords(std::move(s), res.stoplist);
  if (c.has(Step::Lemmatization)) s = lemmatize(std::move(s), res.lemmas);
  return s;
}

inline vectorize::SparseVector dense_to_sparse(const std::vector<int>& w) {
  vectorize::SparseVector v;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (w[t] != 0) v.entries.emplace_back(static_cast<std::uint32_t>(t), static_cast<double>(w[t]));
  }
  return v;
}

/// NB log-joints for [NotOffensive, Offensive] computed straight from integer
/// counts with alpha = 1, in long double.
inline std::array<long double, 2> nb_log_joint(const std::vector<std::vector<int>>& docs,
                                               const std::vector<corpus::Label>& y, const std::vector<int>& probe) {
  const std::size_t v = probe.size();
  std::array<long double, 2> out{};
  for (std::size_t c = 0; c < 2; ++c) {
    long double n_docs = 0;
    long double total = 0;
    std::vector<long double> counts(v, 0);
    for (std::size_t d = 0; d < docs.size(); ++d) {
      if (models::class_index(y[d]) != c) continue;
      n_docs += 1;
      for (std::size_t t = 0; t < v; ++t) {
        counts[t] += docs[d][t];
        total += docs[d][t];
      }
    }
    long double lj = std::log(n_docs / static_cast<long double>(docs.size()));
    for (std::size_t t = 0; t < v; ++t) {
      lj += probe[t] * std::log((counts[t] + 1) / (total + static_cast<long double>(v)));
    }
    out[c] = lj;
  }
  return out;
}

/// Largest absolute log-joint error of train_nb on one instance, probing every
/// training document plus the all-ones vector. Returns -1 for single-class
/// instances, which train_nb must reject.
inline double nb_instance_error(const std::vector<std::vector<int>>& docs, const std::vector<corpus::Label>& y,
                                std::size_t v) {
  std::vector<vectorize::SparseVector> x;
  for (const auto& d : docs) x.push_back(dense_to_sparse(d));
  bool seen[2] = {false, false};
  for (auto l : y) seen[models::class_index(l)] = true;
  if (!seen[0] || !seen[1]) {
    try {
      models::train_nb(x, y, v);
    } catch (const Error&) {
      return -1;
    }
    return HUGE_VAL;
  }
  const auto m = models::train_nb(x, y, v);
  std::vector<std::vector<int>> probes = docs;
  probes.emplace_back(v, 1);
  double worst = 0;
  for (const auto& p : probes) {
    const auto got = models::nb_log_joint(m, dense_to_sparse(p));
    const auto want = nb_log_joint(docs, y, p);
    for (std::size_t c = 0; c < 2; ++c) worst = std::max(worst, std::abs(got[c] - static_cast<double>(want[c])));
  }
  return worst;
}

/// Every NB instance in the checked range: all grids with D * V <= 8 and
/// values 0..3 enumerated exhaustively, then `samples` random grids over the
/// full 4 x 5 range. Calls `fn(error)` once per instance.
template <class Fn>
void for_each_nb_instance(std::size_t samples, Fn&& fn) {
  using corpus::Label;
  for (std::size_t d = 1; d <= 4; ++d) {
    for (std::size_t v = 1; v <= 5 && d * v <= 8; ++v) {
      const std::size_t cells = d * v;
      std::size_t combos = 1;
      for (std::size_t i = 0; i < cells; ++i) combos *= 4;
      for (std::size_t code = 0; code < combos; ++code) {
        std::vector<std::vector<int>> docs(d, std::vector<int>(v));
        auto c = code;
        for (std::size_t i = 0; i < cells; ++i, c /= 4) docs[i / v][i % v] = static_cast<int>(c % 4);
        for (std::size_t mask = 0; mask < (1u << d); ++mask) {
          std::vector<Label> y(d);
          for (std::size_t i = 0; i < d; ++i) y[i] = (mask >> i) & 1 ? Label::Offensive : Label::NotOffensive;
          fn(nb_instance_error(docs, y, v));
        }
      }
    }
  }
  SplitMix64 rng(55);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto d = 2 + rng.below(3);
    const auto v = 1 + rng.below(5);
    std::vector<std::vector<int>> docs(d, std::vector<int>(v));
    for (auto& row : docs) {
      for (auto& w : row) w = static_cast<int>(rng.below(4));
    }
    std::vector<Label> y(d);
    for (auto& l : y) l = rng.below(2) ? Label::Offensive : Label::NotOffensive;
    fn(nb_instance_error(docs, y, v));
  }
}

/// `offensive` ids o0.., then `not_offensive` ids n00...
inline corpus::LabeledDataset make_dataset(std::size_t offensive, std::size_t not_offensive) {
  std::vector<corpus::LabeledEntry> entries;
  for (std::size_t i = 0; i < offensive; ++i) {
    entries.push_back({"o" + std::to_string(i), "text", corpus::Label::Offensive});
  }
  for (std::size_t i = 0; i < not_offensive; ++i) {
    char id[24];
    std::snprintf(id, sizeof id, "n%02zu", i);
    entries.push_back({id, "text", corpus::Label::NotOffensive});
  }
  return corpus::LabeledDataset(std::move(entries));
}

}  // namespace modkit::oracle
