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

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <catch_amalgamated.hpp>

#include "modkit/analytics.hpp"
#include "modkit/random.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace modkit;
using namespace modkit::analytics;
using textprep::TokenStream;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string repeat(std::string_view s, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += s;
  return out;
}

}  // namespace

TEST_CASE("ngram_counts examples", "[analytics]") {
  const std::vector<TokenStream> abab{{{"a", "b", "a", "b"}, {}}};
  CHECK(ngram_counts(abab, 2, 10).rows == Ranked{{"a b", 2}, {"b a", 1}});
  CHECK(ngram_counts(std::vector<TokenStream>{}, 1, 20).rows.empty());
  const std::vector<TokenStream> cts{{{"critical", "thinking", "skills"}, {}}};
  CHECK(ngram_counts(cts, 3, 20).rows == Ranked{{"critical thinking skills", 1}});
  CHECK_THROWS_AS(ngram_counts(abab, 0, 20), Error);
  CHECK_THROWS_AS(ngram_counts(abab, 4, 20), Error);
}

TEST_CASE("ngram_counts matches brute-force enumeration", "[analytics][property]") {
  SplitMix64 rng(123);
  for (int round = 0; round < 50; ++round) {
    const auto corpus = oracle::random_corpus(rng);
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto table = ngram_counts(corpus, n, 20);
      REQUIRE(table.rows == oracle::ngram_brute_force(corpus, n, 20));
      std::size_t windows = 0;
      for (const auto& d : corpus) windows += d.tokens.size() >= n ? d.tokens.size() - n + 1 : 0;
      REQUIRE(table.total == windows);
      REQUIRE(ngram_counts(corpus, n, 20, false, 1 + static_cast<unsigned>(rng.below(8))) == table);
    }
  }
}

TEST_CASE("count merging is order independent", "[analytics][property]") {
  SplitMix64 rng(8);
  for (int round = 0; round < 30; ++round) {
    const auto corpus = oracle::random_corpus(rng);
    const auto whole = count_ngrams(corpus, 2);
    std::vector<NgramCounts> parts;
    for (std::size_t i = 0; i < corpus.size();) {
      const auto len = std::min<std::size_t>(1 + rng.below(5), corpus.size() - i);
      parts.push_back(count_ngrams(std::span(corpus).subspan(i, len), 2));
      i += len;
    }
    shuffle(std::span(parts), rng);
    NgramCounts merged;
    for (const auto& p : parts) merged.merge(p);
    REQUIRE(merged == whole);
  }
}

TEST_CASE("length_histogram", "[analytics]") {
  const std::vector<std::string> texts{std::string(5, 'x'), std::string(60, 'x'), std::string(61, 'x')};
  const auto h = length_histogram(std::span<const std::string>(texts), 10);
  CHECK(h.buckets == std::map<std::size_t, std::size_t>{{0, 1}, {60, 2}});
  CHECK(h.total() == 3);
  CHECK(length_histogram(std::span<const std::string>(), 10).buckets.empty());
  const std::vector<std::string> empty_text{""};
  CHECK(length_histogram(std::span<const std::string>(empty_text), 10).buckets ==
        std::map<std::size_t, std::size_t>{{0, 1}});
  const std::vector<std::string> wide{"😂😂😂", "ééé"};
  CHECK(length_histogram(std::span<const std::string>(wide), 3).buckets ==
        std::map<std::size_t, std::size_t>{{3, 2}});
  CHECK_THROWS_AS(length_histogram(std::span<const std::string>(texts), 0), Error);

  SplitMix64 rng(4);
  std::vector<std::string> many;
  for (int i = 0; i < 200; ++i) many.push_back(std::string(rng.below(150), 'a'));
  CHECK(length_histogram(std::span<const std::string>(many), 7).total() == many.size());
}

TEST_CASE("emoji_frequency", "[analytics]") {
  const std::vector<std::string> texts{"😂😂", "😂"};
  CHECK(emoji_frequency(texts) == Ranked{{"face_with_tears_of_joy", 3}});
  const std::vector<std::string> banana{repeat("🍌", 50)};
  CHECK(emoji_frequency(banana, 1) == Ranked{{"banana", 1}});
  CHECK(emoji_frequency(banana) == Ranked{{"banana", 50}});
  const std::vector<std::string> none{"no emoji here", ""};
  CHECK(emoji_frequency(none).empty());
  const std::vector<std::string> emoticon{"nice :)"};
  CHECK(emoji_frequency(emoticon) == Ranked{{"slightly_smiling_face", 1}});
}

TEST_CASE("emoji cap never raises a count", "[analytics][property]") {
  SplitMix64 rng(31);
  static const std::vector<std::string> pool{"😂", "💀", "🍌", "a", " ", "🤡"};
  std::vector<std::string> texts(40);
  for (auto& t : texts) {
    const auto n = rng.below(30);
    for (std::size_t i = 0; i < n; ++i) t += pool[rng.below(pool.size())];
  }
  const auto full = emoji_frequency(texts);
  std::map<std::string, std::size_t> full_map(full.begin(), full.end());
  for (std::size_t cap = 1; cap <= 10; ++cap) {
    for (const auto& [alias, c] : emoji_frequency(texts, cap)) CHECK(c <= full_map.at(alias));
  }
}

TEST_CASE("emoji_presence", "[analytics]") {
  using corpus::Label;
  const corpus::LabeledDataset d({{"1", "lol 😂", Label::Offensive},
                                  {"2", "lol", Label::Offensive},
                                  {"3", "nice 👍", Label::NotOffensive},
                                  {"4", "nice", Label::NotOffensive}});
  const auto p = emoji_presence(d);
  CHECK(p.overall == 0.5);
  CHECK(p.offensive == 0.5);
  CHECK(p.not_offensive == 0.5);

  const corpus::LabeledDataset plain({{"1", "a", Label::Offensive}, {"2", "b", Label::NotOffensive}});
  CHECK(emoji_presence(plain) == EmojiPresence{});
  CHECK_THROWS_AS(emoji_presence(corpus::LabeledDataset{}), Error);
}

TEST_CASE("round4 is exact half-up rounding", "[analytics]") {
  CHECK(round4(880, 10000) == 0.0880);
  CHECK(round4(359, 5000) == 0.0718);
  CHECK(round4(521, 5000) == 0.1042);
  CHECK(round4(1, 3) == 0.3333);
  CHECK(round4(2, 3) == 0.6667);
  CHECK(round4(1, 20000) == 0.0001);
  CHECK(round4(0, 0) == 0.0);
}

TEST_CASE("emoji presence on a constructed corpus", "[analytics]") {
  using corpus::Label;
  std::vector<corpus::LabeledEntry> entries;
  for (int i = 0; i < 5000; ++i) {
    entries.push_back({"o" + std::to_string(i), i < 359 ? "so funny 💀" : "so funny", Label::Offensive});
    entries.push_back({"n" + std::to_string(i), i < 521 ? "love it ❤" : "love it", Label::NotOffensive});
  }
  const auto p = emoji_presence(corpus::LabeledDataset(std::move(entries)));
  CHECK(p.overall == 0.0880);
  CHECK(p.offensive == 0.0718);
  CHECK(p.not_offensive == 0.1042);
  CHECK(p.with_emoji == 880);
}

TEST_CASE("cloud_weights", "[analytics]") {
  NgramTable t{1, {{"a", 4}, {"b", 2}}, false, 6};
  const auto w = cloud_weights(t);
  CHECK(w.terms.at("a") == 1.0);
  CHECK(w.terms.at("b") == 0.5);
  CHECK(cloud_weights(NgramTable{1, {{"x", 3}}, false, 3}).terms.at("x") == 1.0);
  const auto eq = cloud_weights(NgramTable{1, {{"x", 2}, {"y", 2}}, false, 4});
  CHECK(eq.terms.at("x") == 1.0);
  CHECK(eq.terms.at("y") == 1.0);
  CHECK_THROWS_AS(cloud_weights(NgramTable{}), Error);

  SplitMix64 rng(2);
  const auto corpus = oracle::random_corpus(rng);
  const auto table = ngram_counts(corpus, 1, 20);
  if (!table.rows.empty()) {
    const auto cw = cloud_weights(table);
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
      CHECK(cw.terms.at(table.rows[i - 1].first) >= cw.terms.at(table.rows[i].first));
    }
    for (const auto& [_, v] : cw.terms) CHECK((v > 0 && v <= 1));
  }
}

TEST_CASE("chart data export", "[analytics]") {
  testing::TempDir dir;
  const NgramTable t{2, {{"a b", 2}, {"b, c", 1}}, false, 3};
  export_chart_data(t, dir / "ngrams.csv");
  CHECK(slurp(dir / "ngrams.csv") == "gram,count\na b,2\n\"b, c\",1\n");
  CHECK(read_ngram_csv(dir / "ngrams.csv") == t.rows);

  LengthHistogram h{10, {{60, 2}, {0, 1}}};
  export_chart_data(h, dir / "lengths.csv");
  CHECK(slurp(dir / "lengths.csv") == "bucket_start,count\n0,1\n60,2\n");
  CHECK(read_histogram_csv(dir / "lengths.csv") == h.buckets);

  EmojiStats s{{{"skull", 3}}, EmojiPresence{0.088, 0.0718, 0.1042, 0, 0, 0}, std::nullopt};
  export_chart_data(s, dir / "emoji.csv");
  CHECK(slurp(dir / "emoji.csv") ==
        "alias,count\nskull,3\npresence_overall,0.0880\npresence_offensive,0.0718\npresence_not_offensive,0.1042\n");
  const auto back = read_emoji_csv(dir / "emoji.csv");
  CHECK(back.frequency == s.frequency);
  REQUIRE(back.presence);
  CHECK(back.presence->offensive == 0.0718);
}
