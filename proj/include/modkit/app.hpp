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

// The `modkit` command-line front end. Subcommands:
//
//   ingest   comment-tree JSON files -> dataset file (+ labels, lexicon flags)
//   balance  undersample the majority class
//   analyze  n-gram, length, and emoji chart data as CSV
//   train    training cycles -> run directory with model files and manifest
//   eval     score a trained run on a dataset
//   report   merge metrics reports into one table
//
// Exit codes: 0 ok, 2 usage/config/IO, 3 data, 4 numeric.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "modkit/analytics.hpp"
#include "modkit/corpus.hpp"
#include "modkit/dataset_io.hpp"
#include "modkit/error.hpp"
#include "modkit/eval.hpp"
#include "modkit/experiment.hpp"
#include "modkit/parallel.hpp"
#include "modkit/textprep.hpp"
#include "modkit/vectorize.hpp"

namespace modkit::cli {

inline constexpr std::string_view k_version = "0.1.0";
inline constexpr std::uint64_t k_default_seed = 42;

namespace fs = std::filesystem;
using nlohmann::json;

// ---------------------------------------------------------------------------
// Resources

/// Bundled tables, overridden file-by-file from $MODKIT_DATA_DIR, then by an
/// explicit stop-list path.
inline textprep::Resources load_resources(const std::string& stoplist_path = {}) {
  textprep::Resources res = textprep::Resources::bundled();
  if (const char* dir = std::getenv("MODKIT_DATA_DIR"); dir && *dir) {
    const fs::path base(dir);
    const auto maybe = [&](const char* name) -> std::optional<std::string> {
      const auto p = base / name;
      if (!fs::exists(p)) return std::nullopt;
      return io::read_file(p.string());
    };
    if (auto t = maybe("stopwords.txt")) res.stoplist = textprep::StopList::parse(*t);
    if (auto t = maybe("emoticons.tsv")) res.emoticons = textprep::EmoticonMap::parse(*t);
    if (auto t = maybe("emoji_aliases.tsv")) res.emojis = textprep::EmojiTable::parse(*t);
    auto exc = maybe("lemma_exceptions.tsv");
    auto rules = maybe("lemma_rules.tsv");
    if (exc || rules) {
      res.lemmas = textprep::LemmaDictionary::parse(exc ? *exc : std::string(bundled::k_lemma_exceptions),
                                                    rules ? *rules : std::string(bundled::k_lemma_rules));
    }
  }
  if (!stoplist_path.empty()) res.stoplist = textprep::StopList::parse(io::read_file(stoplist_path));
  return res;
}

// ---------------------------------------------------------------------------
// Run configuration

inline json default_run_config() {
  return {
      {"variant_name", ""},
      {"model", "nb"},
      {"seed", k_default_seed},
      {"n_cycles", 5},
      {"ratios", {0.8, 0.1, 0.1}},
      {"preprocess", {{"steps", json::array()}, {"emoji_mode", "ml"}}},
      {"nb", {{"alpha", 1.0}}},
      {"lr", {{"learning_rate", 0.1}, {"epochs", 500}, {"l2", 1e-4}}},
      {"threads", 1},
      {"paths", {{"dataset", ""}, {"stoplist", ""}, {"output_dir", "runs"}}},
  };
}

/// Applies `key.path=value`; the value is parsed as JSON when possible and
/// taken as a string otherwise.
inline void apply_set(json& config, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw Error(ErrorCode::BadConfig, "--set expects key=value, got '" + std::string(assignment) + "'");
  }
  const std::string key(assignment.substr(0, eq));
  const std::string raw(assignment.substr(eq + 1));
  json value = json::parse(raw, nullptr, false);
  if (value.is_discarded()) value = raw;
  json* node = &config;
  std::string_view rest = key;
  for (;;) {
    const auto dot = rest.find('.');
    const std::string part(rest.substr(0, dot));
    if (!node->is_object()) throw Error(ErrorCode::BadConfig, "cannot set '" + key + "'");
    if (dot == std::string_view::npos) {
      (*node)[part] = std::move(value);
      return;
    }
    node = &(*node)[part];
    rest.remove_prefix(dot + 1);
  }
}

/// Deep-merges `patch` into `base` (objects merge, everything else replaces).
inline void merge_config(json& base, const json& patch) {
  for (const auto& [k, v] : patch.items()) {
    if (v.is_object() && base.contains(k) && base[k].is_object()) {
      merge_config(base[k], v);
    } else {
      base[k] = v;
    }
  }
}

struct RunConfig {
  json doc;
  experiment::ExperimentConfig experiment;
  std::uint64_t seed = k_default_seed;
  std::size_t n_cycles = 1;
  std::string dataset;
  std::string stoplist;
  std::string output_dir;
};

inline textprep::PreprocessConfig parse_preprocess(const json& j) {
  std::vector<textprep::Step> steps;
  for (const auto& s : j.at("steps")) {
    const auto step = textprep::parse_step(s.get<std::string>());
    if (!step) throw Error(ErrorCode::BadConfig, "unknown preprocessing step '" + s.get<std::string>() + "'");
    steps.push_back(*step);
  }
  const auto mode = j.value("emoji_mode", std::string("ml"));
  if (mode != "ml" && mode != "bert") throw Error(ErrorCode::BadConfig, "emoji_mode must be 'ml' or 'bert'");
  return textprep::PreprocessConfig(steps, mode == "bert" ? textprep::EmojiMode::BertDelimited
                                                          : textprep::EmojiMode::MlPlain);
}

inline RunConfig parse_run_config(const json& doc) {
  RunConfig rc;
  rc.doc = doc;
  try {
    auto& e = rc.experiment;
    e.variant_name = doc.at("variant_name").get<std::string>();
    const auto model = doc.at("model").get<std::string>();
    if (model == "nb") e.model = experiment::ModelKind::NaiveBayes;
    else if (model == "lr") e.model = experiment::ModelKind::LogisticRegression;
    else throw Error(ErrorCode::BadConfig, "model must be 'nb' or 'lr'");
    e.nb_alpha = doc.at("nb").at("alpha").get<double>();
    if (!(e.nb_alpha > 0)) throw Error(ErrorCode::BadAlpha, "nb.alpha must be positive");
    const auto& lr = doc.at("lr");
    e.lr = {lr.at("learning_rate").get<double>(), lr.at("epochs").get<std::size_t>(), lr.at("l2").get<double>()};
    e.preprocess = parse_preprocess(doc.at("preprocess"));
    if (e.variant_name.empty()) {
      // Named like the published rows unless the config says otherwise.
      e.variant_name = std::string(model == "nb" ? "Naive Bayes" : "Logistic Regression") +
                       (e.preprocess.has(textprep::Step::EmojiEncoding) ? " Emojis" : " Default");
      rc.doc["variant_name"] = e.variant_name;
    }
    const auto ratios = doc.at("ratios").get<std::vector<double>>();
    if (ratios.size() != 3) throw Error(ErrorCode::BadRatios, "ratios must have three entries");
    e.ratios = {ratios[0], ratios[1], ratios[2]};
    corpus::split_sizes(0, e.ratios);
    e.threads = std::max(1u, doc.at("threads").get<unsigned>());
    rc.seed = doc.at("seed").get<std::uint64_t>();
    rc.n_cycles = doc.at("n_cycles").get<std::size_t>();
    if (rc.n_cycles < 1) throw Error(ErrorCode::BadConfig, "n_cycles must be at least 1");
    const auto& paths = doc.at("paths");
    rc.dataset = paths.at("dataset").get<std::string>();
    rc.stoplist = paths.value("stoplist", std::string{});
    rc.output_dir = paths.value("output_dir", std::string("runs"));
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::BadConfig, std::string("config: ") + ex.what());
  }
  if (rc.dataset.empty()) throw Error(ErrorCode::BadConfig, "no dataset given (paths.dataset or --dataset)");
  for (const auto& p : {rc.dataset, rc.stoplist}) {
    if (!p.empty() && !fs::exists(p)) throw Error(ErrorCode::IoError, "'" + p + "' does not exist");
  }
  return rc;
}

/// Hash naming the run directory: the config without settings that cannot
/// change results (thread count, output location), plus the dataset bytes.
inline std::string run_hash(const json& config, std::string_view dataset_checksum) {
  json key = config;
  key.erase("threads");
  key["paths"].erase("output_dir");
  return io::fnv1a64(key.dump() + "|" + std::string(dataset_checksum));
}

// ---------------------------------------------------------------------------
// Commands

struct Globals {
  std::optional<std::uint64_t> seed;
  std::string config_path;
  std::optional<unsigned> threads;
  std::optional<std::size_t> cap;
  std::string stoplist;
  std::string lexicon;
  std::string emoji_mode;
  std::vector<std::string> sets;
};

inline std::string fixed4(double v) { return eval::fixed4(v); }

/// Re-throws corpus errors with the file they came from.
template <class Fn>
auto with_context(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

struct IngestOptions {
  std::vector<std::string> trees;
  std::string labels;
  std::string output;
};

inline int cmd_ingest(const IngestOptions& opt, const Globals& g, std::ostream& out) {
  std::vector<corpus::Comment> all;
  std::map<std::string, std::string> post_of;
  for (const auto& path : opt.trees) {
    const auto tree = with_context(path, [&] { return corpus::parse_comment_tree(io::read_file(path)); });
    for (auto& c : corpus::flatten(tree)) {
      if (!post_of.emplace(c.id, tree.post_id).second) {
        throw Error(ErrorCode::DuplicateId, path + ": comment id '" + c.id + "' already seen in another file");
      }
      all.push_back(std::move(c));
    }
  }
  const auto unique = corpus::dedupe(all);

  std::vector<io::DatasetRecord> records;
  std::size_t labeled = 0;
  std::size_t offensive = 0;
  if (!opt.labels.empty()) {
    auto labels = with_context(opt.labels, [&] { return corpus::parse_label_file(io::read_file(opt.labels)); });
    for (const auto& [id, _] : labels) {
      if (!post_of.contains(id)) {
        throw Error(ErrorCode::UnknownCommentId, opt.labels + ": label references unknown comment '" + id + "'");
      }
    }
    std::unordered_set<std::string> kept;
    for (const auto& c : unique) kept.insert(c.id);
    std::erase_if(labels, [&](const auto& kv) { return !kept.contains(kv.first); });
    const auto result = corpus::apply_labels(unique, labels, post_of);
    for (const auto& e : result.dataset.entries()) {
      records.push_back({e.comment_id, e.text, post_of.at(e.comment_id), e.label, {}});
    }
    labeled = result.dataset.size();
    offensive = result.dataset.offensive_count();
  } else {
    for (const auto& c : unique) records.push_back({c.id, c.text, post_of.at(c.id), std::nullopt, {}});
  }

  std::size_t flagged = 0;
  if (!g.lexicon.empty()) {
    const auto lexicon = with_context(g.lexicon, [&] { return corpus::parse_lexicon(io::read_file(g.lexicon)); });
    std::vector<corpus::Comment> kept;
    for (const auto& r : records) kept.push_back({r.id, {}, r.text, std::nullopt, 0});
    auto hits = corpus::lexicon_flag(kept, lexicon);
    for (auto& r : records) {
      if (auto it = hits.find(r.id); it != hits.end()) {
        r.lexicon = std::move(it->second);
        ++flagged;
      }
    }
  }

  io::write_dataset(opt.output, records);
  out << all.size() << " total, " << unique.size() << " unique, " << labeled << " labeled ("
      << offensive << " offensive, " << labeled - offensive << " not offensive), "
      << (opt.labels.empty() ? 0 : unique.size() - labeled) << " unlabeled";
  if (!g.lexicon.empty()) out << ", " << flagged << " flagged by lexicon";
  out << "\n";
  return 0;
}

struct BalanceOptions {
  std::string dataset;
  std::string output;
};

inline int cmd_balance(const BalanceOptions& opt, const Globals& g, std::ostream& out) {
  const auto records = io::read_dataset(opt.dataset);
  const auto labeled = with_context(opt.dataset, [&] { return io::to_labeled(records); });
  const auto balanced = corpus::balance(labeled, g.seed.value_or(k_default_seed));
  io::write_dataset(opt.output, io::select(records, balanced));
  out << balanced.offensive_count() << " offensive + " << balanced.not_offensive_count()
      << " not offensive = " << balanced.size() << "\n";
  return 0;
}

struct AnalyzeOptions {
  std::string dataset;
  std::string output_dir;
  std::size_t top_k = 20;
  std::size_t bucket_width = 10;
};

/// Writes ngrams_{1,2,3}_{all,nostop}.csv, lengths_{all,offensive}.csv,
/// emoji.csv, and cloud_words.csv into the output directory.
inline int cmd_analyze(const AnalyzeOptions& opt, const Globals& g, std::ostream& out) {
  const auto records = io::read_dataset(opt.dataset);
  const auto res = load_resources(g.stoplist);
  const unsigned threads = g.threads.value_or(1);
  fs::create_directories(opt.output_dir);
  const auto path = [&](const std::string& name) { return (fs::path(opt.output_dir) / name).string(); };

  using textprep::Step;
  const textprep::PreprocessConfig plain{Step::Lowercasing, Step::PunctuationRemoval};
  const textprep::PreprocessConfig no_stop{Step::Lowercasing, Step::PunctuationRemoval, Step::StopwordRemoval};
  for (const auto* cfg : {&plain, &no_stop}) {
    const bool removed = cfg == &no_stop;
    const auto streams = parallel_map(records.size(), threads, [&](std::size_t i) {
      return textprep::run_pipeline(records[i].text, *cfg, res, records[i].id);
    });
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto table = analytics::ngram_counts(streams, n, opt.top_k, removed, threads);
      analytics::export_chart_data(table, path("ngrams_" + std::to_string(n) + (removed ? "_nostop" : "_all") + ".csv"));
      if (removed && n == 1) {
        const auto weights = table.rows.empty() ? analytics::CloudWeights{} : analytics::cloud_weights(table);
        analytics::export_chart_data(weights, path("cloud_words.csv"));
      }
    }
  }

  std::vector<std::string> all_texts;
  std::vector<std::string> offensive_texts;
  bool fully_labeled = true;
  for (const auto& r : records) {
    all_texts.push_back(r.text);
    if (!r.label) fully_labeled = false;
    if (r.label == corpus::Label::Offensive) offensive_texts.push_back(r.text);
  }
  analytics::export_chart_data(analytics::length_histogram(std::span<const std::string>(all_texts), opt.bucket_width),
                               path("lengths_all.csv"));
  analytics::export_chart_data(
      analytics::length_histogram(std::span<const std::string>(offensive_texts), opt.bucket_width),
      path("lengths_offensive.csv"));

  analytics::EmojiStats stats;
  stats.per_comment_cap = g.cap;
  stats.frequency = analytics::emoji_frequency(all_texts, g.cap, res);
  if (fully_labeled && !records.empty()) stats.presence = analytics::emoji_presence(io::to_labeled(records), res);
  analytics::export_chart_data(stats, path("emoji.csv"));

  out << "analyzed " << records.size() << " comments into " << opt.output_dir << "\n";
  if (stats.presence) {
    out << "emoji presence: overall " << fixed4(stats.presence->overall) << ", offensive "
        << fixed4(stats.presence->offensive) << ", not offensive " << fixed4(stats.presence->not_offensive) << "\n";
  }
  return 0;
}

struct TrainOptions {
  std::string dataset;
  std::string output_dir;
};

/// Resolved configuration: defaults <- config file <- --set <- flags.
inline json resolve_config(const Globals& g, const std::string& dataset, const std::string& output_dir) {
  json doc = default_run_config();
  if (!g.config_path.empty()) {
    const auto file = io::read_json(g.config_path);
    if (!file.is_object()) throw Error(ErrorCode::BadConfig, g.config_path + ": config must be an object");
    merge_config(doc, file);
  }
  for (const auto& s : g.sets) apply_set(doc, s);
  if (g.seed) doc["seed"] = *g.seed;
  if (g.threads) doc["threads"] = *g.threads;
  if (!g.emoji_mode.empty()) doc["preprocess"]["emoji_mode"] = g.emoji_mode;
  if (!g.stoplist.empty()) doc["paths"]["stoplist"] = g.stoplist;
  if (!dataset.empty()) doc["paths"]["dataset"] = dataset;
  if (!output_dir.empty()) doc["paths"]["output_dir"] = output_dir;
  return doc;
}

inline int cmd_train(const TrainOptions& opt, const Globals& g, std::ostream& out) {
  using clock = std::chrono::steady_clock;
  const auto ms_since = [](clock::time_point t) {
    return std::chrono::duration<double, std::milli>(clock::now() - t).count();
  };
  json timings = json::object();
  auto t0 = clock::now();

  const auto rc = parse_run_config(resolve_config(g, opt.dataset, opt.output_dir));
  const auto dataset_bytes = io::read_file(rc.dataset);
  const auto records = io::dataset_from_json(io::parse_json(dataset_bytes, rc.dataset), rc.dataset);
  const auto dataset = with_context(rc.dataset, [&] { return io::to_labeled(records); });
  const auto res = load_resources(rc.stoplist);
  timings["load"] = ms_since(t0);

  t0 = clock::now();
  const auto report = experiment::run_cycles(dataset, rc.experiment, rc.n_cycles, rc.seed, res);
  timings["train"] = ms_since(t0);

  t0 = clock::now();
  const auto dataset_checksum = io::fnv1a64(dataset_bytes);
  const auto run_dir = fs::path(rc.output_dir) / ("run-" + run_hash(rc.doc, dataset_checksum));
  fs::create_directories(run_dir);
  const std::map<std::string, std::string> artifacts = {
      {"config.json", rc.doc.dump(2) + "\n"},
      {"tfidf.json", report.best.tfidf.to_json().dump() + "\n"},
      {"model.json", report.best.model_json().dump() + "\n"},
      {"train_report.json", report.to_json().dump(2) + "\n"},
  };
  json checksums = json::object();
  for (const auto& [name, content] : artifacts) {
    io::write_file_atomic((run_dir / name).string(), content);
    checksums[name] = io::fnv1a64(content);
  }
  timings["write"] = ms_since(t0);

  json manifest = {{"tool", "modkit"},
                   {"version", k_version},
                   {"config", rc.doc},
                   {"dataset", rc.dataset},
                   {"dataset_checksum", dataset_checksum},
                   {"artifacts", checksums}};
  manifest["checksum"] = io::fnv1a64(manifest.dump());
  manifest["timings_ms"] = timings;
  io::write_file_atomic((run_dir / "manifest.json").string(), manifest.dump(2) + "\n");

  for (std::size_t i = 0; i < report.cycles.size(); ++i) {
    const auto& c = report.cycles[i];
    out << "cycle " << i << " (seed " << c.seed << "): validation F1 " << fixed4(c.validation.f1)
        << ", accuracy " << fixed4(c.validation.accuracy) << "\n";
  }
  const auto& best = report.best_cycle().test;
  out << "best cycle " << report.best_cycle_index << " test: F1 " << fixed4(best.f1) << ", accuracy "
      << fixed4(best.accuracy) << ", precision " << fixed4(best.precision) << ", recall "
      << fixed4(best.recall) << ", specificity " << fixed4(best.specificity) << "\n";
  out << "run directory: " << run_dir.string() << "\n";
  return 0;
}

struct EvalOptions {
  std::string run_dir;
  std::string dataset;
  std::string split = "all";
  std::string output_dir;
};

inline int cmd_eval(const EvalOptions& opt, const Globals& g, std::ostream& out) {
  const fs::path run(opt.run_dir);
  const auto config = io::read_json((run / "config.json").string());
  json resolved = config;
  if (!opt.dataset.empty()) resolved["paths"]["dataset"] = opt.dataset;
  if (g.threads) resolved["threads"] = *g.threads;
  const auto rc = parse_run_config(resolved);

  experiment::Classifier clf{vectorize::TfidfModel::from_json(io::read_json((run / "tfidf.json").string())),
                             experiment::Classifier::model_from_json(io::read_json((run / "model.json").string()))};
  const auto records = io::read_dataset(rc.dataset);
  auto dataset = with_context(rc.dataset, [&] { return io::to_labeled(records); });

  if (opt.split != "all") {
    const auto report = io::read_json((run / "train_report.json").string());
    const auto best = report.at("best_cycle_index").get<std::size_t>();
    const auto seed = report.at("cycles").at(best).at("seed").get<std::uint64_t>();
    auto parts = corpus::split(dataset, rc.experiment.ratios, seed);
    if (opt.split == "train") dataset = std::move(parts.train);
    else if (opt.split == "validation") dataset = std::move(parts.validation);
    else if (opt.split == "test") dataset = std::move(parts.test);
    else throw Error(ErrorCode::BadConfig, "--split must be all, train, validation, or test");
  }

  const auto res = load_resources(rc.stoplist);
  const auto streams = experiment::preprocess_all(dataset, rc.experiment.preprocess, res, rc.experiment.threads);
  std::vector<textprep::TokenStream> docs;
  std::vector<corpus::Label> labels;
  for (const auto& e : dataset.entries()) {
    docs.push_back(streams.at(e.comment_id));
    labels.push_back(e.label);
  }
  const auto metrics = experiment::evaluate(clf, docs, labels, rc.experiment.variant_name);
  const std::vector<eval::MetricsReport> variants{metrics};

  const fs::path dest = opt.output_dir.empty() ? run : fs::path(opt.output_dir);
  fs::create_directories(dest);
  const auto text = eval::report_text(variants);
  io::write_file_atomic((dest / "report.json").string(), eval::report_json(variants).dump(2) + "\n");
  io::write_file_atomic((dest / "report.txt").string(), text);
  out << text;
  return 0;
}

struct ReportOptions {
  std::vector<std::string> inputs;
  std::string output_prefix;
};

inline int cmd_report(const ReportOptions& opt, std::ostream& out) {
  std::vector<eval::MetricsReport> variants;
  for (const auto& p : opt.inputs) {
    auto v = with_context(p, [&] { return eval::parse_report_json(io::read_json(p)); });
    variants.insert(variants.end(), v.begin(), v.end());
  }
  if (variants.empty()) throw Error(ErrorCode::Empty, "no variants to report");
  const auto text = eval::report_text(variants);
  if (!opt.output_prefix.empty()) {
    io::write_file_atomic(opt.output_prefix + ".json", eval::report_json(variants).dump(2) + "\n");
    io::write_file_atomic(opt.output_prefix + ".txt", text);
  }
  out << text;
  return 0;
}

// ---------------------------------------------------------------------------
// Entry point

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"modkit: comment corpus analytics and offensive-content classification"};
  app.set_version_flag("--version", std::string(k_version));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::size_t cap = 0;
  auto* seed_opt = app.add_option("--seed", seed, "Seed for sampling and splitting");
  app.add_option("--config", g.config_path, "JSON run configuration")->check(CLI::ExistingFile);
  auto* threads_opt = app.add_option("--threads", threads, "Worker thread cap")->check(CLI::PositiveNumber);
  auto* cap_opt = app.add_option("--cap", cap, "Per-comment cap on counted occurrences of one emoji")
                      ->check(CLI::PositiveNumber);
  app.add_option("--stoplist", g.stoplist, "Stop-word list replacing the bundled one")->check(CLI::ExistingFile);
  app.add_option("--lexicon", g.lexicon, "Lexicon file (term<TAB>category)")->check(CLI::ExistingFile);
  app.add_option("--emoji-mode", g.emoji_mode, "Emoji encoding for training")->check(CLI::IsMember({"ml", "bert"}));
  app.add_option("--set", g.sets, "Config override key=value (repeatable)");

  IngestOptions ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Flatten, de-duplicate, and label comment trees");
  ingest_cmd->add_option("trees", ingest.trees, "Comment-tree JSON files")->required();
  ingest_cmd->add_option("--labels", ingest.labels, "Label file (comment id -> 0/1)");
  ingest_cmd->add_option("-o,--output", ingest.output, "Dataset file to write")->required();

  BalanceOptions balance;
  auto* balance_cmd = app.add_subcommand("balance", "Undersample the majority class");
  balance_cmd->add_option("dataset", balance.dataset, "Labeled dataset file")->required();
  balance_cmd->add_option("-o,--output", balance.output, "Balanced dataset file to write")->required();

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Write n-gram, length, and emoji chart data");
  analyze_cmd->add_option("dataset", analyze.dataset, "Dataset file")->required();
  analyze_cmd->add_option("-o,--output", analyze.output_dir, "Output directory")->required();
  analyze_cmd->add_option("--top-k", analyze.top_k, "Rows per n-gram table")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--bucket-width", analyze.bucket_width, "Length histogram bucket width")
      ->check(CLI::PositiveNumber);

  TrainOptions train;
  auto* train_cmd = app.add_subcommand("train", "Run training cycles and save the best model");
  train_cmd->add_option("--dataset", train.dataset, "Labeled dataset file");
  train_cmd->add_option("-o,--output", train.output_dir, "Directory that holds run directories");

  EvalOptions evaluate;
  auto* eval_cmd = app.add_subcommand("eval", "Score a trained run");
  eval_cmd->add_option("run", evaluate.run_dir, "Run directory written by train")->required()->check(CLI::ExistingDirectory);
  eval_cmd->add_option("--dataset", evaluate.dataset, "Dataset file (default: the training dataset)");
  eval_cmd->add_option("--split", evaluate.split, "all, or the train/validation/test part of the best cycle")
      ->check(CLI::IsMember({"all", "train", "validation", "test"}));
  eval_cmd->add_option("-o,--output", evaluate.output_dir, "Report directory (default: the run directory)");

  ReportOptions report;
  auto* report_cmd = app.add_subcommand("report", "Merge metrics reports into one table");
  report_cmd->add_option("inputs", report.inputs, "Report JSON files, in row order")->required();
  report_cmd->add_option("-o,--output", report.output_prefix, "Write <prefix>.json and <prefix>.txt");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  if (*seed_opt) g.seed = seed;
  if (*threads_opt) g.threads = threads;
  if (*cap_opt) g.cap = cap;

  try {
    if (*ingest_cmd) return cmd_ingest(ingest, g, out);
    if (*balance_cmd) return cmd_balance(balance, g, out);
    if (*analyze_cmd) return cmd_analyze(analyze, g, out);
    if (*train_cmd) return cmd_train(train, g, out);
    if (*eval_cmd) return cmd_eval(evaluate, g, out);
    if (*report_cmd) return cmd_report(report, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace modkit::cli
