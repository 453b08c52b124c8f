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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances are fixed here and reported next to each line.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "modkit/analytics.hpp"
#include "modkit/dataset_io.hpp"
#include "modkit/eval.hpp"
#include "modkit/experiment.hpp"
#include "modkit/models.hpp"
#include "modkit/wordpiece.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace modkit;
namespace fs = std::filesystem;
using corpus::Label;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Runs the CLI binary; stdout and stderr go to `log`.
int run_cli(const std::string& args, const std::string& log) {
  const auto cmd = "\"" + std::string(MODKIT_CLI_PATH) + "\" " + args + " >\"" + log + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  return status == 0 ? 0 : (WIFEXITED(status) ? WEXITSTATUS(status) : -1);
}

std::string q(const std::string& s) { return "\"" + s + "\""; }

std::string only_run_dir(const std::string& runs) {
  std::vector<fs::path> dirs;
  for (const auto& e : fs::directory_iterator(runs)) dirs.push_back(e.path());
  if (dirs.size() != 1) throw std::runtime_error("expected one run directory in " + runs);
  return dirs.front().string();
}

std::vector<std::string> lines_of(const std::string& path) {
  std::vector<std::string> out;
  const auto text = io::read_file(path);
  for (auto line : split_lines(text)) {
    if (!line.empty()) out.emplace_back(line);
  }
  return out;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

// 1
Outcome balance_size() {
  const auto d = oracle::make_dataset(2034, 75650);
  const auto t0 = Clock::now();
  const auto b = corpus::balance(d, 42);
  const double secs = seconds_since(t0);
  const bool ok = b.size() == 4068 && b.offensive_count() == 2034 && b.not_offensive_count() == 2034 && secs < 1.0;
  return {ok, std::to_string(b.size()) + " rows in " + std::to_string(secs) + " s (limit 1 s)"};
}

// 2
Outcome metric_suite() {
  const auto r = eval::metrics({337, 55, 70, 352});
  const double tol = 5e-5;
  bool ok = std::abs(r.precision - 0.8597) <= tol && std::abs(r.recall - 0.8280) <= tol &&
            std::abs(r.f1 - 0.8436) <= tol && std::abs(r.accuracy - 0.8464) <= tol &&
            std::abs(r.specificity - 0.8649) <= tol && !r.degenerate;
  SplitMix64 rng(1234);
  std::size_t bad = 0;
  for (int i = 0; i < 10000; ++i) {
    eval::ConfusionMatrix m{rng.below(500), rng.below(500), rng.below(500), rng.below(500)};
    if (m.total() == 0) m.tn = 1;
    const auto s = eval::metrics(m);
    const double tp = static_cast<double>(m.tp);
    const double fp = static_cast<double>(m.fp);
    const double fn = static_cast<double>(m.fn);
    const double tn = static_cast<double>(m.tn);
    bool good = s.accuracy == (tp + tn) / (tp + fp + fn + tn);
    good &= m.tp + m.fp == 0 ? s.precision == 0 : s.precision == tp / (tp + fp);
    good &= m.tp + m.fn == 0 ? s.recall == 0 : s.recall == tp / (tp + fn);
    good &= m.tn + m.fp == 0 ? s.specificity == 0 : s.specificity == tn / (tn + fp);
    good &= m.tp == 0 ? s.f1 == 0 : std::abs(s.f1 - 2 * tp / (2 * tp + fp + fn)) <= 1e-15;
    for (double v : {s.f1, s.accuracy, s.precision, s.recall, s.specificity}) good &= v >= 0 && v <= 1;
    bad += !good;
  }
  ok &= bad == 0;
  return {ok, "10000 matrices, " + std::to_string(bad) + " mismatches; published matrix within 5e-5"};
}

// 3
Outcome nb_oracle() {
  std::size_t checked = 0;
  std::size_t rejected = 0;
  double worst = 0;
  oracle::for_each_nb_instance(100000, [&](double err) {
    if (err < 0) {
      ++rejected;
    } else {
      ++checked;
      worst = std::max(worst, err);
    }
  });
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu instances, max log-joint error %.3g (tol 1e-9), %zu single-class rejected",
                checked, worst, rejected);
  return {worst <= 1e-9 && checked > 1000000, buf};
}

// 4
Outcome lr_gradient_and_descent() {
  double worst = 0;
  const double eps = 1e-5;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SplitMix64 rng(seed);
    std::vector<vectorize::SparseVector> x(5);
    for (auto& v : x) {
      for (std::uint32_t t = 0; t < 8; ++t) v.entries.emplace_back(t, rng.uniform() * 2 - 1);
    }
    std::vector<Label> y(5);
    for (auto& l : y) l = rng.below(2) ? Label::Offensive : Label::NotOffensive;
    std::vector<double> w(8);
    for (auto& v : w) v = rng.uniform() * 2 - 1;
    const double b = rng.uniform() - 0.5;
    const double l2 = 1e-4;
    const auto g = models::lr_gradient(w, b, x, y, l2);
    const auto rel = [](double a, double n) { return std::abs(a - n) / std::max({std::abs(a), std::abs(n), 1e-8}); };
    for (std::size_t t = 0; t < w.size(); ++t) {
      auto up = w;
      auto down = w;
      up[t] += eps;
      down[t] -= eps;
      const double numeric = (models::lr_loss(up, b, x, y, l2) - models::lr_loss(down, b, x, y, l2)) / (2 * eps);
      worst = std::max(worst, rel(g.weights[t], numeric));
    }
    const double nb = (models::lr_loss(w, b + eps, x, y, l2) - models::lr_loss(w, b - eps, x, y, l2)) / (2 * eps);
    worst = std::max(worst, rel(g.bias, nb));
  }

  std::vector<corpus::LabeledDataset> sets;
  sets.push_back(io::to_labeled(io::read_dataset(testing::fixture("analytics/dataset.json"))));
  const auto tree = corpus::parse_comment_tree(io::read_file(testing::fixture("separable/tree.json")));
  const auto labels = corpus::parse_label_file(io::read_file(testing::fixture("separable/labels.json")));
  sets.push_back(corpus::apply_labels(corpus::flatten(tree), labels).dataset);
  std::size_t rises = 0;
  for (const auto& d : sets) {
    const auto streams = experiment::preprocess_all(d, textprep::PreprocessConfig::all(), textprep::Resources::bundled(), 1);
    std::vector<textprep::TokenStream> docs;
    std::vector<Label> y;
    for (const auto& e : d.entries()) {
      docs.push_back(streams.at(e.comment_id));
      y.push_back(e.label);
    }
    const auto tfidf = vectorize::TfidfModel::fit(docs);
    const auto m = models::train_lr(tfidf.transform(docs), y, tfidf.vocab_size());
    for (std::size_t i = 1; i < m.loss_history.size(); ++i) rises += m.loss_history[i] > m.loss_history[i - 1];
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "max relative gradient error %.3g (tol 1e-6), %zu loss increases over 500 epochs",
                worst, rises);
  return {worst < 1e-6 && rises == 0, buf};
}

// 5
Outcome separable_training() {
  testing::TempDir dir;
  const auto t0 = Clock::now();
  const auto ds = dir / "ds.json";
  if (run_cli("ingest " + q(testing::fixture("separable/tree.json")) + " --labels " +
                  q(testing::fixture("separable/labels.json")) + " -o " + q(ds),
              dir / "ingest.log") != 0) {
    return {false, "ingest failed: " + io::read_file(dir / "ingest.log")};
  }
  std::string detail;
  bool ok = true;
  for (const std::string model : {"nb", "lr"}) {
    const auto runs = dir / ("runs-" + model);
    if (run_cli("--set model=" + model + " train --dataset " + q(ds) + " -o " + q(runs), dir / "train.log") != 0) {
      return {false, model + " training failed: " + io::read_file(dir / "train.log")};
    }
    const auto report = io::read_json(only_run_dir(runs) + "/train_report.json");
    const double f1 = report.at("cycles")[report.at("best_cycle_index").get<std::size_t>()].at("test").at("f1");
    ok &= f1 >= 0.95;
    detail += model + " test F1 " + eval::fixed4(f1) + ", ";
  }
  const double secs = seconds_since(t0);
  ok &= secs < 10.0;
  return {ok, detail + "min 0.95, " + std::to_string(secs) + " s (limit 10 s)"};
}

// 6
Outcome fragmentation() {
  const auto lines = lines_of(testing::fixture("slang_corpus.txt"));
  const auto aliases = lines_of(testing::fixture("slang_aliases.txt"));
  const auto& base = wordpiece::Vocab::bundled();
  const auto before = wordpiece::fragmentation_rate(lines, base);
  std::vector<std::string> added{"simp", "boomer", "cap"};
  added.insert(added.end(), aliases.begin(), aliases.end());
  const auto after = wordpiece::fragmentation_rate(lines, wordpiece::augment_vocab(base, added));
  bool ok = after.pieces_per_word < before.pieces_per_word && after.split_word_fraction < before.split_word_fraction;

  std::set<std::string> pool_set(aliases.begin(), aliases.end());
  for (const auto& l : lines) {
    for (auto& w : wordpiece::split_whitespace(l)) pool_set.insert(w);
  }
  const std::vector<std::string> pool(pool_set.begin(), pool_set.end());
  SplitMix64 rng(2718);
  std::size_t rises = 0;
  for (int round = 0; round < 100; ++round) {
    std::vector<std::string> pick;
    for (std::size_t k = 1 + rng.below(15); k > 0; --k) pick.push_back(pool[rng.below(pool.size())]);
    const auto f = wordpiece::fragmentation_rate(lines, wordpiece::augment_vocab(base, pick));
    rises += f.pieces_per_word > before.pieces_per_word || f.split_word_fraction > before.split_word_fraction;
  }
  ok &= rises == 0;
  char buf[200];
  std::snprintf(buf, sizeof buf, "pieces/word %.4f -> %.4f, split share %.4f -> %.4f, %zu of 100 random sets rose",
                before.pieces_per_word, after.pieces_per_word, before.split_word_fraction,
                after.split_word_fraction, rises);
  return {ok, buf};
}

// 7
Outcome ngram_oracle() {
  SplitMix64 rng(123);
  std::size_t bad = 0;
  for (int round = 0; round < 50; ++round) {
    const auto corpus = oracle::random_corpus(rng);
    for (std::size_t n = 1; n <= 3; ++n) {
      bad += analytics::ngram_counts(corpus, n, 20).rows != oracle::ngram_brute_force(corpus, n, 20);
    }
  }
  testing::TempDir dir;
  if (run_cli("analyze " + q(testing::fixture("analytics/dataset.json")) + " -o " + q(dir / "out"),
              dir / "analyze.log") != 0) {
    return {false, "analyze failed: " + io::read_file(dir / "analyze.log")};
  }
  std::size_t golden_bad = 0;
  for (int n = 1; n <= 3; ++n) {
    for (const std::string variant : {"all", "nostop"}) {
      const auto name = "ngrams_" + std::to_string(n) + "_" + variant + ".csv";
      golden_bad += io::read_file(dir / ("out/" + name)) != io::read_file(testing::fixture("analytics/golden/" + name));
    }
  }
  return {bad == 0 && golden_bad == 0, std::to_string(bad) + " of 150 tables differ, " +
                                           std::to_string(golden_bad) + " of 6 golden files differ"};
}

// 8
Outcome pipeline_composition() {
  using namespace textprep;
  const auto& r = Resources::bundled();
  SplitMix64 rng(2024);
  std::size_t bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto text = oracle::fuzz_text(rng);
    const auto mode = rng.below(2) ? EmojiMode::BertDelimited : EmojiMode::MlPlain;
    const auto config = oracle::config_from_mask(static_cast<unsigned>(rng.below(32)), mode);
    bad += run_pipeline(text, config).tokens != oracle::manual_pipeline(text, config).tokens;
  }
  SplitMix64 rng2(5);
  std::size_t not_idem = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto base = tokenize(oracle::fuzz_text(rng2));
    const auto lower = lowercase(base);
    const auto nopunct = remove_punctuation(base, r.emojis);
    const auto nostop = remove_stopwords(lower, r.stoplist);
    const auto lemmas = lemmatize(remove_punctuation(lower, r.emojis), r.lemmas);
    not_idem += lowercase(lower) != lower || remove_punctuation(nopunct, r.emojis) != nopunct ||
                remove_stopwords(nostop, r.stoplist) != nostop || lemmatize(lemmas, r.lemmas) != lemmas;
  }
  return {bad == 0 && not_idem == 0, std::to_string(bad) + " of 1000 compositions differ, " +
                                         std::to_string(not_idem) + " of 1000 idempotency checks fail"};
}

// 9
Outcome emoji_presence() {
  std::vector<corpus::LabeledEntry> entries;
  for (int i = 0; i < 5000; ++i) {
    entries.push_back({"o" + std::to_string(i), i < 359 ? "so funny 💀" : "so funny", Label::Offensive});
    entries.push_back({"n" + std::to_string(i), i < 521 ? "love it ❤" : "love it", Label::NotOffensive});
  }
  const auto p = analytics::emoji_presence(corpus::LabeledDataset(std::move(entries)));
  const bool ok = p.overall == 0.0880 && p.offensive == 0.0718 && p.not_offensive == 0.1042;
  return {ok, "overall " + eval::fixed4(p.overall) + ", offensive " + eval::fixed4(p.offensive) +
                  ", not offensive " + eval::fixed4(p.not_offensive) + " (exact)"};
}

// 10
Outcome determinism() {
  testing::TempDir dir;
  std::vector<std::string> model;
  std::vector<std::string> report;
  for (const std::string tag : {"a", "b"}) {
    const auto ds = dir / ("ds-" + tag + ".json");
    const auto log = dir / "run.log";
    if (run_cli("ingest " + q(testing::fixture("separable/tree.json")) + " --labels " +
                    q(testing::fixture("separable/labels.json")) + " -o " + q(ds), log) != 0 ||
        run_cli("--seed 7 train --dataset " + q(ds) + " -o " + q(dir / ("runs-" + tag)), log) != 0) {
      return {false, "pipeline failed: " + io::read_file(log)};
    }
    const auto run = only_run_dir(dir / ("runs-" + tag));
    if (run_cli("eval " + q(run) + " -o " + q(dir / ("eval-" + tag)), log) != 0) {
      return {false, "eval failed: " + io::read_file(log)};
    }
    model.push_back(io::read_file(run + "/model.json"));
    report.push_back(io::read_file(dir / ("eval-" + tag + "/report.json")));
  }
  const bool ok = model[0] == model[1] && report[0] == report[1];
  return {ok, std::string("model.json ") + (model[0] == model[1] ? "identical" : "differs") + ", report.json " +
                  (report[0] == report[1] ? "identical" : "differs")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"balance-undersampling-size", balance_size},
      {"metric-suite", metric_suite},
      {"naive-bayes-counting-oracle", nb_oracle},
      {"logistic-regression-gradient-and-descent", lr_gradient_and_descent},
      {"separable-corpus-training", separable_training},
      {"vocabulary-augmentation-fragmentation", fragmentation},
      {"ngram-counting-oracle", ngram_oracle},
      {"preprocessing-composition", pipeline_composition},
      {"emoji-presence-rates", emoji_presence},
      {"end-to-end-determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
