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

// Confusion matrices, the five reported scores, and model-variation tables.
// Offensive is the positive class throughout.

#include <array>
#include <cstdio>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "modkit/corpus.hpp"
#include "modkit/error.hpp"

namespace modkit::eval {

using corpus::Label;

struct ConfusionMatrix {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  std::size_t total() const noexcept { return tp + fp + fn + tn; }
  bool operator==(const ConfusionMatrix&) const = default;
};

inline ConfusionMatrix confusion(std::span<const Label> y_true, std::span<const Label> y_pred) {
  if (y_true.size() != y_pred.size()) {
    throw Error(ErrorCode::LengthMismatch, std::to_string(y_true.size()) + " labels vs " +
                                               std::to_string(y_pred.size()) + " predictions");
  }
  if (y_true.empty()) throw Error(ErrorCode::Empty, "no examples to evaluate");
  ConfusionMatrix m;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const bool truth = y_true[i] == Label::Offensive;
    const bool pred = y_pred[i] == Label::Offensive;
    if (truth && pred) ++m.tp;
    else if (!truth && pred) ++m.fp;
    else if (truth && !pred) ++m.fn;
    else ++m.tn;
  }
  return m;
}

struct MetricsReport {
  std::string variant_name;
  ConfusionMatrix matrix;
  double f1 = 0;
  double accuracy = 0;
  double precision = 0;
  double recall = 0;
  double specificity = 0;
  /// Set when some score was 0/0 and reported as 0.
  bool degenerate = false;

  bool operator==(const MetricsReport&) const = default;
};

/// Scores from a confusion matrix. Any 0/0 is reported as 0 and flags the
/// report as degenerate.
inline MetricsReport metrics(const ConfusionMatrix& m, std::string variant_name = {}) {
  MetricsReport r;
  r.variant_name = std::move(variant_name);
  r.matrix = m;
  const auto ratio = [&](std::size_t num, std::size_t den) {
    if (den == 0) {
      r.degenerate = true;
      return 0.0;
    }
    return static_cast<double>(num) / static_cast<double>(den);
  };
  r.precision = ratio(m.tp, m.tp + m.fp);
  r.recall = ratio(m.tp, m.tp + m.fn);
  r.specificity = ratio(m.tn, m.tn + m.fp);
  r.accuracy = ratio(m.tp + m.tn, m.total());
  if (r.precision + r.recall > 0) {
    r.f1 = 2 * r.precision * r.recall / (r.precision + r.recall);
  } else {
    r.f1 = 0;
    r.degenerate = true;
  }
  return r;
}

inline MetricsReport evaluate(std::span<const Label> y_true, std::span<const Label> y_pred,
                              std::string variant_name = {}) {
  return metrics(confusion(y_true, y_pred), std::move(variant_name));
}

/// Variant labels used in the published comparison table. The BERT rows can
/// only be filled from supplied reference scores.
inline constexpr std::array<std::string_view, 8> k_variant_names = {
    "Naive Bayes Default", "Naive Bayes Emojis", "Logistic Regression Default",
    "Logistic Regression Emojis", "BERT Default", "BERT Emojis", "BERT Slang",
    "BERT Emoji & slang"};

inline std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

/// Scores are rounded to four decimals in the JSON as well, so reference
/// rows render exactly as supplied.
inline nlohmann::json to_json(const MetricsReport& r) {
  const auto round4 = [](double v) { return std::stod(fixed4(v)); };
  return {{"name", r.variant_name},
          {"matrix", {{"tp", r.matrix.tp}, {"fp", r.matrix.fp}, {"fn", r.matrix.fn}, {"tn", r.matrix.tn}}},
          {"f1", round4(r.f1)},
          {"accuracy", round4(r.accuracy)},
          {"precision", round4(r.precision)},
          {"recall", round4(r.recall)},
          {"specificity", round4(r.specificity)},
          {"degenerate", r.degenerate}};
}

inline MetricsReport from_json(const nlohmann::json& j) {
  try {
    MetricsReport r;
    r.variant_name = j.at("name").get<std::string>();
    const auto& m = j.at("matrix");
    r.matrix = {m.at("tp").get<std::size_t>(), m.at("fp").get<std::size_t>(),
                m.at("fn").get<std::size_t>(), m.at("tn").get<std::size_t>()};
    r.f1 = j.at("f1").get<double>();
    r.accuracy = j.at("accuracy").get<double>();
    r.precision = j.at("precision").get<double>();
    r.recall = j.at("recall").get<double>();
    r.specificity = j.at("specificity").get<double>();
    r.degenerate = j.value("degenerate", false);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaViolation, std::string("metrics report: ") + e.what());
  }
}

/// `{variants: [...]}` in input order.
inline nlohmann::json report_json(std::span<const MetricsReport> variants) {
  auto arr = nlohmann::json::array();
  for (const auto& v : variants) arr.push_back(to_json(v));
  return {{"variants", std::move(arr)}};
}

inline std::vector<MetricsReport> parse_report_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("variants") || !j["variants"].is_array()) {
    throw Error(ErrorCode::SchemaViolation, "report must be an object with a 'variants' array");
  }
  std::vector<MetricsReport> out;
  for (const auto& v : j["variants"]) out.push_back(from_json(v));
  return out;
}

/// Aligned text table, columns in the order of the published table:
/// confusion matrix cells, then F1, accuracy, precision, recall, specificity.
inline std::string report_text(std::span<const MetricsReport> variants) {
  const std::vector<std::string> header = {"Model variation", "TP", "FN", "FP", "TN", "F1",
                                           "Accuracy", "Precision", "Recall", "Specificity"};
  std::vector<std::vector<std::string>> rows{header};
  for (const auto& v : variants) {
    rows.push_back({v.variant_name + (v.degenerate ? " *" : ""), std::to_string(v.matrix.tp),
                    std::to_string(v.matrix.fn), std::to_string(v.matrix.fp),
                    std::to_string(v.matrix.tn), fixed4(v.f1), fixed4(v.accuracy),
                    fixed4(v.precision), fixed4(v.recall), fixed4(v.specificity)});
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], utf8::scalar_count(r[c]));
  }
  std::string out;
  const auto rule = [&] {
    for (std::size_t c = 0; c < width.size(); ++c) {
      out += (c ? "-+-" : "");
      out.append(width[c], '-');
    }
    out += '\n';
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < rows[i].size(); ++c) {
      if (c) out += " | ";
      const auto pad = width[c] - utf8::scalar_count(rows[i][c]);
      if (c == 0) {
        out += rows[i][c];
        out.append(pad, ' ');
      } else {
        out.append(pad, ' ');
        out += rows[i][c];
      }
    }
    out += '\n';
    if (i == 0) rule();
  }
  bool any_degenerate = false;
  for (const auto& v : variants) any_degenerate |= v.degenerate;
  if (any_degenerate) out += "* a score was 0/0 and is reported as 0\n";
  return out;
}

}  // namespace modkit::eval
