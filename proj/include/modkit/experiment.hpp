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

// Training cycles: re-split, featurize, train, validate, and keep the cycle
// with the best validation F1.

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "modkit/corpus.hpp"
#include "modkit/error.hpp"
#include "modkit/eval.hpp"
#include "modkit/models.hpp"
#include "modkit/parallel.hpp"
#include "modkit/textprep.hpp"
#include "modkit/vectorize.hpp"

namespace modkit::experiment {

enum class ModelKind : std::uint8_t { NaiveBayes, LogisticRegression };

constexpr std::string_view to_string(ModelKind k) {
  return k == ModelKind::NaiveBayes ? "nb" : "lr";
}

struct ExperimentConfig {
  std::string variant_name = "Naive Bayes Default";
  ModelKind model = ModelKind::NaiveBayes;
  double nb_alpha = 1.0;
  models::LRParams lr;
  textprep::PreprocessConfig preprocess;
  corpus::SplitRatios ratios;
  unsigned threads = 1;
};

/// A fitted TF-IDF model plus the classifier trained on its features.
struct Classifier {
  vectorize::TfidfModel tfidf;
  std::variant<models::NBModel, models::LRModel> model;

  models::Prediction predict(const textprep::TokenStream& doc) const {
    const auto x = tfidf.transform(doc);
    if (const auto* nb = std::get_if<models::NBModel>(&model)) return models::predict_nb(*nb, x);
    return models::predict_lr(std::get<models::LRModel>(model), x);
  }

  nlohmann::json model_json() const {
    return std::visit([](const auto& m) { return m.to_json(); }, model);
  }

  static std::variant<models::NBModel, models::LRModel> model_from_json(const nlohmann::json& j) {
    const auto type = j.value("type", std::string{});
    if (type == "naive_bayes") return models::NBModel::from_json(j);
    if (type == "logistic_regression") return models::LRModel::from_json(j);
    throw Error(ErrorCode::SchemaViolation, "unknown model type '" + type + "'");
  }
};

struct CycleResult {
  std::uint64_t seed = 0;
  eval::MetricsReport validation;
  eval::MetricsReport test;
};

struct TrainReport {
  std::vector<CycleResult> cycles;
  std::size_t best_cycle_index = 0;
  Classifier best;

  const CycleResult& best_cycle() const { return cycles.at(best_cycle_index); }

  nlohmann::json to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& c : cycles) {
      arr.push_back({{"seed", c.seed}, {"validation", eval::to_json(c.validation)}, {"test", eval::to_json(c.test)}});
    }
    return {{"best_cycle_index", best_cycle_index}, {"cycles", std::move(arr)}};
  }
};

/// Highest validation F1; ties go to higher accuracy, then the earlier cycle.
inline std::size_t select_best(std::span<const eval::MetricsReport> validation) {
  if (validation.empty()) throw Error(ErrorCode::Empty, "no cycles to choose from");
  std::size_t best = 0;
  for (std::size_t i = 1; i < validation.size(); ++i) {
    const auto& a = validation[i];
    const auto& b = validation[best];
    if (a.f1 > b.f1 || (a.f1 == b.f1 && a.accuracy > b.accuracy)) best = i;
  }
  return best;
}

/// Preprocessed token streams for every entry, by comment id.
inline std::unordered_map<std::string, textprep::TokenStream> preprocess_all(
    const corpus::LabeledDataset& dataset, const textprep::PreprocessConfig& config,
    const textprep::Resources& res, unsigned threads) {
  const auto& entries = dataset.entries();
  auto streams = parallel_map(entries.size(), threads, [&](std::size_t i) {
    return textprep::run_pipeline(entries[i].text, config, res, entries[i].comment_id);
  });
  std::unordered_map<std::string, textprep::TokenStream> out;
  out.reserve(entries.size());
  for (auto& s : streams) {
    auto id = s.source_id;
    out.emplace(std::move(id), std::move(s));
  }
  return out;
}

namespace detail {

struct Features {
  std::vector<textprep::TokenStream> docs;
  std::vector<corpus::Label> labels;
};

inline Features gather(const corpus::LabeledDataset& part,
                       const std::unordered_map<std::string, textprep::TokenStream>& streams) {
  Features f;
  f.docs.reserve(part.size());
  f.labels.reserve(part.size());
  for (const auto& e : part.entries()) {
    f.docs.push_back(streams.at(e.comment_id));
    f.labels.push_back(e.label);
  }
  return f;
}

}  // namespace detail

inline Classifier train_classifier(std::span<const textprep::TokenStream> docs,
                                   std::span<const corpus::Label> labels,
                                   const ExperimentConfig& config) {
  auto tfidf = vectorize::TfidfModel::fit(docs);
  const auto x = tfidf.transform(docs);
  if (config.model == ModelKind::NaiveBayes) {
    auto nb = models::train_nb(x, labels, tfidf.vocab_size(), config.nb_alpha);
    return {std::move(tfidf), std::move(nb)};
  }
  auto lr = models::train_lr(x, labels, tfidf.vocab_size(), config.lr);
  return {std::move(tfidf), std::move(lr)};
}

inline eval::MetricsReport evaluate(const Classifier& clf, std::span<const textprep::TokenStream> docs,
                                    std::span<const corpus::Label> labels, std::string name) {
  std::vector<corpus::Label> pred;
  pred.reserve(docs.size());
  for (const auto& d : docs) pred.push_back(clf.predict(d).label);
  return eval::evaluate(labels, pred, std::move(name));
}

/// Runs `n_cycles` cycles; cycle i splits with seed `base_seed + i`. Test
/// metrics are reported for every cycle, but only the best cycle's count.
inline TrainReport run_cycles(const corpus::LabeledDataset& dataset, const ExperimentConfig& config,
                              std::size_t n_cycles, std::uint64_t base_seed,
                              const textprep::Resources& res = textprep::Resources::bundled()) {
  if (n_cycles < 1) throw Error(ErrorCode::BadConfig, "n_cycles must be at least 1");
  const auto streams = preprocess_all(dataset, config.preprocess, res, config.threads);

  TrainReport report;
  std::vector<Classifier> classifiers;
  std::vector<eval::MetricsReport> validation;
  for (std::size_t i = 0; i < n_cycles; ++i) {
    const std::uint64_t seed = base_seed + i;
    const auto parts = corpus::split(dataset, config.ratios, seed);
    const auto train = detail::gather(parts.train, streams);
    const auto val = detail::gather(parts.validation, streams);
    const auto test = detail::gather(parts.test, streams);
    auto clf = train_classifier(train.docs, train.labels, config);
    CycleResult c{seed, evaluate(clf, val.docs, val.labels, config.variant_name),
                  evaluate(clf, test.docs, test.labels, config.variant_name)};
    validation.push_back(c.validation);
    report.cycles.push_back(std::move(c));
    classifiers.push_back(std::move(clf));
  }
  report.best_cycle_index = select_best(validation);
  report.best = std::move(classifiers[report.best_cycle_index]);
  return report;
}

}  // namespace modkit::experiment
