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

// Binary classifiers over sparse TF-IDF vectors: multinomial Naive Bayes and
// full-batch gradient-descent logistic regression.

#include <array>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "modkit/corpus.hpp"
#include "modkit/error.hpp"
#include "modkit/vectorize.hpp"

namespace modkit::models {

using corpus::Label;
using vectorize::SparseVector;

inline constexpr std::size_t k_not = 0;
inline constexpr std::size_t k_off = 1;

constexpr std::size_t class_index(Label l) { return l == Label::Offensive ? k_off : k_not; }

struct Prediction {
  Label label = Label::NotOffensive;
  /// Probability of the Offensive class.
  double probability = 0;
};

namespace detail {

inline void check_training_set(std::span<const SparseVector> x, std::span<const Label> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::LengthMismatch,
                std::to_string(x.size()) + " vectors vs " + std::to_string(y.size()) + " labels");
  }
  if (x.empty()) throw Error(ErrorCode::Empty, "empty training set");
  bool seen[2] = {false, false};
  for (auto l : y) seen[class_index(l)] = true;
  if (!seen[0] || !seen[1]) throw Error(ErrorCode::SingleClass, "training labels contain a single class");
}

inline double log_sum_exp(double a, double b) {
  const double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Naive Bayes

struct NBModel {
  double alpha = 1.0;
  std::array<double, 2> log_prior{};
  /// log P(term | class), indexed [class][term].
  std::array<std::vector<double>, 2> log_likelihood;

  std::size_t vocab_size() const noexcept { return log_likelihood[0].size(); }

  nlohmann::json to_json() const {
    auto terms = nlohmann::json::array();
    for (std::size_t t = 0; t < vocab_size(); ++t) {
      terms.push_back({{"index", t},
                       {"log_likelihood_off", log_likelihood[k_off][t]},
                       {"log_likelihood_not", log_likelihood[k_not][t]}});
    }
    return {{"type", "naive_bayes"},
            {"alpha", alpha},
            {"log_prior", {{"offensive", log_prior[k_off]}, {"not_offensive", log_prior[k_not]}}},
            {"terms", std::move(terms)}};
  }

  static NBModel from_json(const nlohmann::json& j) {
    try {
      NBModel m;
      m.alpha = j.at("alpha").get<double>();
      m.log_prior[k_off] = j.at("log_prior").at("offensive").get<double>();
      m.log_prior[k_not] = j.at("log_prior").at("not_offensive").get<double>();
      const auto& terms = j.at("terms");
      m.log_likelihood[0].assign(terms.size(), 0);
      m.log_likelihood[1].assign(terms.size(), 0);
      for (const auto& t : terms) {
        const auto i = t.at("index").get<std::size_t>();
        if (i >= terms.size()) throw Error(ErrorCode::SchemaViolation, "NB term index out of range");
        m.log_likelihood[k_off][i] = t.at("log_likelihood_off").get<double>();
        m.log_likelihood[k_not][i] = t.at("log_likelihood_not").get<double>();
      }
      return m;
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::SchemaViolation, std::string("NB model: ") + e.what());
    }
  }
};

/// Multinomial NB treating feature weights as fractional event counts:
///   log P(t|c) = ln((mass(t,c) + alpha) / (mass(c) + alpha * V))
/// with priors equal to class document fractions.
inline NBModel train_nb(std::span<const SparseVector> x, std::span<const Label> y,
                        std::size_t vocab_size, double alpha = 1.0) {
  if (!(alpha > 0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::BadAlpha, "alpha must be positive (got " + std::to_string(alpha) + ")");
  }
  detail::check_training_set(x, y);
  std::array<std::vector<double>, 2> mass{std::vector<double>(vocab_size, 0.0),
                                          std::vector<double>(vocab_size, 0.0)};
  std::array<double, 2> class_mass{0, 0};
  std::array<std::size_t, 2> docs{0, 0};
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto c = class_index(y[i]);
    ++docs[c];
    for (const auto& [t, w] : x[i].entries) {
      if (t >= vocab_size) throw Error(ErrorCode::SchemaViolation, "feature index beyond vocabulary");
      if (w < 0 || !std::isfinite(w)) throw Error(ErrorCode::NonFinite, "NB needs finite non-negative weights");
      mass[c][t] += w;
      class_mass[c] += w;
    }
  }
  NBModel m;
  m.alpha = alpha;
  const double n = static_cast<double>(x.size());
  for (std::size_t c = 0; c < 2; ++c) {
    m.log_prior[c] = std::log(static_cast<double>(docs[c]) / n);
    const double denom = std::log(class_mass[c] + alpha * static_cast<double>(vocab_size));
    m.log_likelihood[c].resize(vocab_size);
    for (std::size_t t = 0; t < vocab_size; ++t) {
      m.log_likelihood[c][t] = std::log(mass[c][t] + alpha) - denom;
    }
  }
  return m;
}

/// log P(c) + sum_t x_t log P(t|c) for [NotOffensive, Offensive]. Indices
/// outside the vocabulary are ignored.
inline std::array<double, 2> nb_log_joint(const NBModel& m, const SparseVector& x) {
  std::array<double, 2> j = m.log_prior;
  for (const auto& [t, w] : x.entries) {
    if (t >= m.vocab_size()) continue;
    j[k_not] += w * m.log_likelihood[k_not][t];
    j[k_off] += w * m.log_likelihood[k_off][t];
  }
  return j;
}

/// Ties go to NotOffensive.
inline Prediction predict_nb(const NBModel& m, const SparseVector& x) {
  const auto j = nb_log_joint(m, x);
  const double p_off = std::exp(j[k_off] - detail::log_sum_exp(j[k_off], j[k_not]));
  return {j[k_off] > j[k_not] ? Label::Offensive : Label::NotOffensive, p_off};
}

// ---------------------------------------------------------------------------
// Logistic regression

struct LRParams {
  double learning_rate = 0.1;
  std::size_t epochs = 500;
  double l2 = 1e-4;

  bool operator==(const LRParams&) const = default;
};

struct LRModel {
  std::vector<double> weights;
  double bias = 0;
  LRParams params;
  /// Training objective before each epoch plus the final value. Not persisted.
  std::vector<double> loss_history;

  nlohmann::json to_json() const {
    return {{"type", "logistic_regression"},
            {"bias", bias},
            {"weights", weights},
            {"hyperparams",
             {{"learning_rate", params.learning_rate}, {"epochs", params.epochs}, {"l2", params.l2}}}};
  }

  static LRModel from_json(const nlohmann::json& j) {
    try {
      LRModel m;
      m.bias = j.at("bias").get<double>();
      m.weights = j.at("weights").get<std::vector<double>>();
      const auto& h = j.at("hyperparams");
      m.params = {h.at("learning_rate").get<double>(), h.at("epochs").get<std::size_t>(),
                  h.at("l2").get<double>()};
      return m;
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::SchemaViolation, std::string("LR model: ") + e.what());
    }
  }
};

inline double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

/// ln(1 + e^z) without overflow.
inline double softplus(double z) { return std::max(z, 0.0) + std::log1p(std::exp(-std::abs(z))); }

inline double lr_margin(std::span<const double> w, double b, const SparseVector& x) {
  double z = b;
  for (const auto& [t, v] : x.entries) {
    if (t < w.size()) z += w[t] * v;
  }
  return z;
}

/// Mean cross-entropy plus (l2 / 2) * |w|^2; the bias is not penalised.
inline double lr_loss(std::span<const double> w, double b, std::span<const SparseVector> x,
                      std::span<const Label> y, double l2) {
  double loss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double z = lr_margin(w, b, x[i]);
    loss += softplus(z) - (y[i] == Label::Offensive ? z : 0.0);
  }
  loss /= static_cast<double>(x.size());
  double sq = 0;
  for (double v : w) sq += v * v;
  return loss + 0.5 * l2 * sq;
}

struct Gradient {
  std::vector<double> weights;
  double bias = 0;
};

inline Gradient lr_gradient(std::span<const double> w, double b, std::span<const SparseVector> x,
                            std::span<const Label> y, double l2) {
  Gradient g{std::vector<double>(w.size(), 0.0), 0.0};
  const double inv_n = 1.0 / static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = sigmoid(lr_margin(w, b, x[i])) - (y[i] == Label::Offensive ? 1.0 : 0.0);
    g.bias += r * inv_n;
    for (const auto& [t, v] : x[i].entries) {
      if (t < w.size()) g.weights[t] += r * v * inv_n;
    }
  }
  for (std::size_t t = 0; t < w.size(); ++t) g.weights[t] += l2 * w[t];
  return g;
}

/// Full-batch gradient descent from zero weights. Deterministic: documents
/// are accumulated in input order.
inline LRModel train_lr(std::span<const SparseVector> x, std::span<const Label> y,
                        std::size_t vocab_size, const LRParams& params = {}) {
  detail::check_training_set(x, y);
  if (!(params.learning_rate > 0) || params.epochs == 0 || !(params.l2 >= 0)) {
    throw Error(ErrorCode::BadConfig, "learning_rate and epochs must be positive, l2 non-negative");
  }
  LRModel m;
  m.params = params;
  m.weights.assign(vocab_size, 0.0);
  m.loss_history.reserve(params.epochs + 1);
  for (std::size_t epoch = 0; epoch <= params.epochs; ++epoch) {
    const double loss = lr_loss(m.weights, m.bias, x, y, params.l2);
    if (!std::isfinite(loss)) {
      throw Error(ErrorCode::NonFinite, "loss diverged at epoch " + std::to_string(epoch) +
                                            "; lower the learning rate");
    }
    m.loss_history.push_back(loss);
    if (epoch == params.epochs) break;
    const auto g = lr_gradient(m.weights, m.bias, x, y, params.l2);
    for (std::size_t t = 0; t < vocab_size; ++t) m.weights[t] -= params.learning_rate * g.weights[t];
    m.bias -= params.learning_rate * g.bias;
  }
  return m;
}

/// Offensive iff probability >= 0.5.
inline Prediction predict_lr(const LRModel& m, const SparseVector& x) {
  const double p = sigmoid(lr_margin(m.weights, m.bias, x));
  return {p >= 0.5 ? Label::Offensive : Label::NotOffensive, p};
}

}  // namespace modkit::models
