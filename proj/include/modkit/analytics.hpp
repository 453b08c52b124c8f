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

// Corpus statistics behind the analysis charts: n-gram rankings, word-cloud
// weights, comment length distributions, and emoji usage.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "modkit/corpus.hpp"
#include "modkit/csv.hpp"
#include "modkit/error.hpp"
#include "modkit/textprep.hpp"
#include "modkit/utf8.hpp"

namespace modkit::analytics {

using Ranked = std::vector<std::pair<std::string, std::size_t>>;

/// Sorts by count descending, then key ascending, and keeps `top_k` rows.
inline Ranked rank(const std::unordered_map<std::string, std::size_t>& counts,
                   std::size_t top_k = SIZE_MAX) {
  Ranked rows(counts.begin(), counts.end());
  const auto cmp = [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  };
  const auto k = std::min(top_k, rows.size());
  std::partial_sort(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(k), rows.end(), cmp);
  rows.resize(k);
  return rows;
}

/// Occurrence counts of n-grams. Merging is commutative and associative, so
/// chunks of a corpus can be counted independently.
struct NgramCounts {
  std::unordered_map<std::string, std::size_t> counts;
  std::size_t total = 0;

  NgramCounts& merge(const NgramCounts& other) {
    for (const auto& [gram, c] : other.counts) counts[gram] += c;
    total += other.total;
    return *this;
  }

  bool operator==(const NgramCounts&) const = default;
};

inline void check_n(std::size_t n) {
  if (n < 1 || n > 3) throw Error(ErrorCode::BadN, "n must be 1, 2, or 3 (got " + std::to_string(n) + ")");
}

/// Counts every contiguous window of `n` tokens inside each stream. Windows
/// never cross stream boundaries.
inline NgramCounts count_ngrams(std::span<const textprep::TokenStream> corpus, std::size_t n) {
  check_n(n);
  NgramCounts out;
  std::string gram;
  for (const auto& stream : corpus) {
    const auto& toks = stream.tokens;
    for (std::size_t i = 0; i + n <= toks.size(); ++i) {
      gram = toks[i];
      for (std::size_t j = 1; j < n; ++j) {
        gram += ' ';
        gram += toks[i + j];
      }
      ++out.counts[gram];
      ++out.total;
    }
  }
  return out;
}

/// Same as `count_ngrams`, split over up to `threads` workers.
inline NgramCounts count_ngrams_parallel(std::span<const textprep::TokenStream> corpus,
                                         std::size_t n, unsigned threads) {
  check_n(n);
  threads = std::max(1u, threads);
  if (threads == 1 || corpus.size() < 2) return count_ngrams(corpus, n);
  const std::size_t chunk = (corpus.size() + threads - 1) / threads;
  std::vector<NgramCounts> parts((corpus.size() + chunk - 1) / chunk);
  std::vector<std::jthread> workers;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    workers.emplace_back([&, p] {
      const auto begin = p * chunk;
      parts[p] = count_ngrams(corpus.subspan(begin, std::min(chunk, corpus.size() - begin)), n);
    });
  }
  workers.clear();
  NgramCounts out;
  for (const auto& part : parts) out.merge(part);
  return out;
}

struct NgramTable {
  std::size_t n = 1;
  Ranked rows;
  bool stopwords_removed = false;
  /// Number of windows counted, including those outside the top rows.
  std::size_t total = 0;

  bool operator==(const NgramTable&) const = default;
};

inline NgramTable ngram_counts(std::span<const textprep::TokenStream> corpus, std::size_t n,
                               std::size_t top_k, bool stopwords_removed = false,
                               unsigned threads = 1) {
  check_n(n);
  if (top_k < 1) throw Error(ErrorCode::BadN, "top_k must be at least 1");
  const auto counts = count_ngrams_parallel(corpus, n, threads);
  return {n, rank(counts.counts, top_k), stopwords_removed, counts.total};
}

struct LengthHistogram {
  std::size_t bucket_width = 1;
  std::map<std::size_t, std::size_t> buckets;

  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& [_, c] : buckets) t += c;
    return t;
  }

  bool operator==(const LengthHistogram&) const = default;
};

/// Lengths in Unicode scalar values, bucketed at multiples of `bucket_width`.
inline LengthHistogram length_histogram(std::span<const std::string> texts, std::size_t bucket_width) {
  if (bucket_width < 1) throw Error(ErrorCode::BadBucketWidth, "bucket width must be at least 1");
  LengthHistogram h{bucket_width, {}};
  for (const auto& t : texts) {
    const auto len = utf8::scalar_count(t);
    ++h.buckets[len / bucket_width * bucket_width];
  }
  return h;
}

inline LengthHistogram length_histogram(std::span<const corpus::Comment> comments, std::size_t bucket_width) {
  std::vector<std::string> texts;
  texts.reserve(comments.size());
  for (const auto& c : comments) texts.push_back(c.text);
  return length_histogram(std::span<const std::string>(texts), bucket_width);
}

// ---------------------------------------------------------------------------
// Emoji

/// Emoji aliases in a comment, in order of appearance. Emoticons are
/// normalised first, so ":)" counts as slightly_smiling_face.
inline std::vector<std::string> emoji_aliases(std::string_view text,
                                              const textprep::Resources& res = textprep::Resources::bundled()) {
  const auto normalized = textprep::normalize_emoticons(text, res.emoticons);
  const auto cps = utf8::decode(normalized);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < cps.size();) {
    if (utf8::is_emoji(cps[i])) {
      const auto alias = res.emojis.alias_of(cps[i]);
      out.emplace_back(alias ? *alias : textprep::k_unknown_emoji);
      ++i;
      while (i < cps.size() && utf8::is_emoji_modifier(cps[i])) ++i;
      continue;
    }
    if (const auto len = textprep::detail::placeholder_at(cps, i, res.emojis); len > 0) {
      out.push_back(utf8::encode(std::u32string_view(cps).substr(i + 1, len - 2)));
      i += len;
      continue;
    }
    ++i;
  }
  return out;
}

/// Emoji occurrences per alias across comments, ranked by (count desc,
/// alias asc). With a cap, at most `cap` occurrences of one alias count per
/// comment, which damps single-comment outliers.
inline Ranked emoji_frequency(std::span<const std::string> texts, std::optional<std::size_t> cap = std::nullopt,
                              const textprep::Resources& res = textprep::Resources::bundled()) {
  std::unordered_map<std::string, std::size_t> totals;
  for (const auto& t : texts) {
    std::unordered_map<std::string, std::size_t> local;
    for (auto& a : emoji_aliases(t, res)) ++local[std::move(a)];
    for (const auto& [alias, c] : local) totals[alias] += cap ? std::min(c, *cap) : c;
  }
  return rank(totals);
}

/// `num / den` rounded half-up to four decimal places, computed exactly.
inline double round4(std::size_t num, std::size_t den) {
  if (den == 0) return 0.0;
  const auto scaled = (static_cast<unsigned __int128>(num) * 20000 + den) / (2 * static_cast<unsigned __int128>(den));
  return static_cast<double>(scaled) / 10000.0;
}

struct EmojiPresence {
  double overall = 0;
  double offensive = 0;
  double not_offensive = 0;
  std::size_t with_emoji = 0;
  std::size_t offensive_with_emoji = 0;
  std::size_t not_offensive_with_emoji = 0;

  bool operator==(const EmojiPresence&) const = default;
};

inline bool contains_emoji(std::string_view text, const textprep::Resources& res = textprep::Resources::bundled()) {
  return !emoji_aliases(text, res).empty();
}

/// Share of comments with at least one emoji, overall and per class. A class
/// with no comments reports 0.
inline EmojiPresence emoji_presence(const corpus::LabeledDataset& dataset,
                                    const textprep::Resources& res = textprep::Resources::bundled()) {
  if (dataset.empty()) throw Error(ErrorCode::EmptyDataset, "emoji presence of an empty dataset");
  EmojiPresence p;
  for (const auto& e : dataset.entries()) {
    if (!contains_emoji(e.text, res)) continue;
    ++p.with_emoji;
    if (e.label == corpus::Label::Offensive) {
      ++p.offensive_with_emoji;
    } else {
      ++p.not_offensive_with_emoji;
    }
  }
  p.overall = round4(p.with_emoji, dataset.size());
  p.offensive = round4(p.offensive_with_emoji, dataset.offensive_count());
  p.not_offensive = round4(p.not_offensive_with_emoji, dataset.not_offensive_count());
  return p;
}

struct EmojiStats {
  Ranked frequency;
  std::optional<EmojiPresence> presence;
  std::optional<std::size_t> per_comment_cap;
};

struct CloudWeights {
  std::map<std::string, double> terms;
};

/// weight = count / max count, so the most frequent term has weight 1.
inline CloudWeights cloud_weights(const NgramTable& table) {
  if (table.rows.empty()) throw Error(ErrorCode::EmptyTable, "word cloud of an empty table");
  std::size_t max_count = 0;
  for (const auto& [_, c] : table.rows) max_count = std::max(max_count, c);
  CloudWeights w;
  for (const auto& [term, c] : table.rows) {
    w.terms.emplace(term, static_cast<double>(c) / static_cast<double>(max_count));
  }
  return w;
}

// ---------------------------------------------------------------------------
// Chart data export

inline std::string format_fraction(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

inline void export_chart_data(const NgramTable& table, const std::string& path) {
  std::vector<csv::Row> rows{{"gram", "count"}};
  for (const auto& [g, c] : table.rows) rows.push_back({g, std::to_string(c)});
  csv::write_file(path, rows);
}

inline void export_chart_data(const LengthHistogram& hist, const std::string& path) {
  std::vector<csv::Row> rows{{"bucket_start", "count"}};
  for (const auto& [b, c] : hist.buckets) rows.push_back({std::to_string(b), std::to_string(c)});
  csv::write_file(path, rows);
}

/// `alias,count` rows followed by `presence_overall`, `presence_offensive`,
/// and `presence_not_offensive` rows when presence is known.
inline void export_chart_data(const EmojiStats& stats, const std::string& path) {
  std::vector<csv::Row> rows{{"alias", "count"}};
  for (const auto& [a, c] : stats.frequency) rows.push_back({a, std::to_string(c)});
  if (stats.presence) {
    rows.push_back({"presence_overall", format_fraction(stats.presence->overall)});
    rows.push_back({"presence_offensive", format_fraction(stats.presence->offensive)});
    rows.push_back({"presence_not_offensive", format_fraction(stats.presence->not_offensive)});
  }
  csv::write_file(path, rows);
}

inline void export_chart_data(const CloudWeights& weights, const std::string& path) {
  std::vector<csv::Row> rows{{"term", "weight"}};
  for (const auto& [t, w] : weights.terms) rows.push_back({t, format_fraction(w)});
  csv::write_file(path, rows);
}

namespace detail {

inline std::size_t to_count(const std::string& s, const std::string& path) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw Error(ErrorCode::SchemaViolation, "bad count '" + s + "' in " + path);
  }
}

inline std::vector<csv::Row> body(const std::string& path, const csv::Row& header) {
  auto rows = csv::read_file(path);
  if (rows.empty() || rows.front() != header) {
    throw Error(ErrorCode::SchemaViolation, "unexpected header in " + path);
  }
  rows.erase(rows.begin());
  for (const auto& r : rows) {
    if (r.size() != 2) throw Error(ErrorCode::SchemaViolation, "expected two columns in " + path);
  }
  return rows;
}

}  // namespace detail

inline Ranked read_ngram_csv(const std::string& path) {
  Ranked out;
  for (const auto& r : detail::body(path, {"gram", "count"})) out.emplace_back(r[0], detail::to_count(r[1], path));
  return out;
}

inline std::map<std::size_t, std::size_t> read_histogram_csv(const std::string& path) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& r : detail::body(path, {"bucket_start", "count"})) {
    out.emplace(detail::to_count(r[0], path), detail::to_count(r[1], path));
  }
  return out;
}

inline EmojiStats read_emoji_csv(const std::string& path) {
  EmojiStats s;
  EmojiPresence p;
  bool any_presence = false;
  for (const auto& r : detail::body(path, {"alias", "count"})) {
    if (r[0].starts_with("presence_")) {
      any_presence = true;
      const double v = std::stod(r[1]);
      if (r[0] == "presence_overall") p.overall = v;
      else if (r[0] == "presence_offensive") p.offensive = v;
      else if (r[0] == "presence_not_offensive") p.not_offensive = v;
      continue;
    }
    s.frequency.emplace_back(r[0], detail::to_count(r[1], path));
  }
  if (any_presence) s.presence = p;
  return s;
}

}  // namespace modkit::analytics
