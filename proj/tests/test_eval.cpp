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

#include <cmath>
#include <string>
#include <vector>

#include <catch_amalgamated.hpp>

#include "modkit/dataset_io.hpp"
#include "modkit/eval.hpp"
#include "modkit/random.hpp"

using namespace modkit;
using namespace modkit::eval;
using corpus::Label;
using Catch::Matchers::WithinAbs;

namespace {

constexpr Label O = Label::Offensive;
constexpr Label N = Label::NotOffensive;

std::vector<Label> random_labels(SplitMix64& rng, std::size_t n) {
  std::vector<Label> out(n);
  for (auto& l : out) l = rng.below(2) ? O : N;
  return out;
}

}  // namespace

TEST_CASE("confusion counts cells", "[eval]") {
  std::vector<Label> truth(20, O);
  std::fill(truth.begin() + 10, truth.end(), N);
  CHECK(confusion(truth, truth) == ConfusionMatrix{10, 0, 0, 10});
  CHECK(confusion(std::vector{O, O, N}, std::vector{O, N, O}) == ConfusionMatrix{1, 1, 1, 0});
  CHECK(confusion(std::vector{O}, std::vector{N}) == ConfusionMatrix{0, 0, 1, 0});
  CHECK(confusion(std::vector{N}, std::vector{O}) == ConfusionMatrix{0, 1, 0, 0});
  CHECK_THROWS_AS(confusion(std::vector{O}, std::vector{O, N}), Error);
  CHECK_THROWS_AS(confusion(std::vector<Label>{}, std::vector<Label>{}), Error);
}

TEST_CASE("metrics of the recurring published matrix", "[eval]") {
  const auto r = metrics({337, 55, 70, 352});
  CHECK_THAT(r.precision, WithinAbs(0.8597, 5e-5));
  CHECK_THAT(r.recall, WithinAbs(0.8280, 5e-5));
  CHECK_THAT(r.f1, WithinAbs(0.8436, 5e-5));
  CHECK_THAT(r.accuracy, WithinAbs(0.8464, 5e-5));
  CHECK_THAT(r.specificity, WithinAbs(0.8649, 5e-5));
  CHECK_FALSE(r.degenerate);
}

TEST_CASE("metrics edge cases", "[eval]") {
  const auto perfect = metrics({5, 0, 0, 5});
  CHECK(perfect.f1 == 1.0);
  CHECK(perfect.accuracy == 1.0);
  CHECK(perfect.precision == 1.0);
  CHECK(perfect.recall == 1.0);
  CHECK(perfect.specificity == 1.0);

  const auto none = metrics({0, 0, 5, 5});
  CHECK(none.recall == 0.0);
  CHECK(none.precision == 0.0);
  CHECK(none.f1 == 0.0);
  CHECK(none.specificity == 1.0);
  CHECK(none.accuracy == 0.5);
  CHECK(none.degenerate);
}

TEST_CASE("metric identities on random matrices", "[eval][property]") {
  SplitMix64 rng(1234);
  for (int i = 0; i < 10000; ++i) {
    ConfusionMatrix m{rng.below(500), rng.below(500), rng.below(500), rng.below(500)};
    if (m.total() == 0) m.tn = 1;
    const auto r = metrics(m);
    const double tp = static_cast<double>(m.tp);
    const double fp = static_cast<double>(m.fp);
    const double fn = static_cast<double>(m.fn);
    const double tn = static_cast<double>(m.tn);
    const bool deg = (m.tp + m.fp == 0) || (m.tp + m.fn == 0) || (m.tn + m.fp == 0);
    REQUIRE(r.degenerate == (deg || r.precision + r.recall == 0));
    REQUIRE(r.accuracy == (tp + tn) / (tp + fp + fn + tn));
    if (m.tp + m.fp > 0) REQUIRE(r.precision == tp / (tp + fp));
    if (m.tp + m.fn > 0) REQUIRE(r.recall == tp / (tp + fn));
    if (m.tn + m.fp > 0) REQUIRE(r.specificity == tn / (tn + fp));
    if (r.precision + r.recall > 0) {
      REQUIRE(r.f1 == 2 * r.precision * r.recall / (r.precision + r.recall));
      // Equivalent raw-count form of the harmonic mean.
      REQUIRE_THAT(r.f1, WithinAbs(2 * tp / (2 * tp + fp + fn), 1e-15));
    }
    for (double v : {r.f1, r.accuracy, r.precision, r.recall, r.specificity}) {
      REQUIRE(v >= 0.0);
      REQUIRE(v <= 1.0);
    }
  }
}

TEST_CASE("metric properties on label vectors", "[eval][property]") {
  SplitMix64 rng(4321);
  for (int i = 0; i < 1000; ++i) {
    auto y = random_labels(rng, 1 + rng.below(100));
    y.push_back(O);
    y.push_back(N);
    const auto same = evaluate(y, y);
    REQUIRE(same.f1 == 1.0);
    REQUIRE(same.accuracy == 1.0);
    REQUIRE(same.precision == 1.0);
    REQUIRE(same.recall == 1.0);
    REQUIRE(same.specificity == 1.0);

    const auto pred = random_labels(rng, y.size());
    const auto a = confusion(y, pred);
    const auto b = confusion(pred, y);
    REQUIRE(a.tp == b.tp);
    REQUIRE(a.tn == b.tn);
    REQUIRE(a.fp == b.fn);
    REQUIRE(a.fn == b.fp);
    REQUIRE(metrics(a).accuracy == metrics(b).accuracy);
  }
}

TEST_CASE("report JSON and text", "[eval]") {
  auto nb = metrics({337, 55, 70, 352}, "Naive Bayes Default");
  auto lr = metrics({0, 0, 5, 5}, "Logistic Regression Default");
  const std::vector<MetricsReport> variants{nb, lr};
  const auto j = report_json(variants);
  REQUIRE(j.at("variants").size() == 2);
  CHECK(j["variants"][0].at("name") == "Naive Bayes Default");
  CHECK(j["variants"][0].at("matrix").at("fp") == 55);
  CHECK(j["variants"][0].at("precision") == 0.8597);
  CHECK(j["variants"][1].at("degenerate") == true);

  const auto back = parse_report_json(j);
  CHECK(back[0].variant_name == nb.variant_name);
  CHECK(back[0].matrix == nb.matrix);
  CHECK(back[0].f1 == 0.8436);

  const auto text = report_text(variants);
  CHECK(text.find("Model variation") == 0);
  CHECK(text.find("Naive Bayes Default") < text.find("Logistic Regression Default"));
  CHECK(text.find("0.8436") != std::string::npos);
  CHECK(text.find("0/0") != std::string::npos);

  const std::vector<MetricsReport> one{nb};
  const auto single = report_text(one);
  CHECK(std::count(single.begin(), single.end(), '\n') == 3);
}

TEST_CASE("reference scores render verbatim", "[eval]") {
  const auto ref = parse_report_json(io::read_json(std::string(MODKIT_SOURCE_DIR) + "/data/reference_scores.json"));
  REQUIRE(ref.size() == k_variant_names.size());
  for (std::size_t i = 0; i < ref.size(); ++i) CHECK(ref[i].variant_name == k_variant_names[i]);
  CHECK(ref.back().f1 == 0.8633);
  const auto text = report_text(ref);
  CHECK(text.find("BERT Emoji & slang          | 232 | 199 |  53 | 331 | 0.8633 |") != std::string::npos);
  // The published matrices do not reproduce the published scores.
  CHECK(metrics(ref[0].matrix).f1 != Catch::Approx(ref[0].f1).margin(1e-3));
}
