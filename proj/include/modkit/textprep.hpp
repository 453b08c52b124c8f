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

// The five-step comment preprocessing pipeline and the tables behind it.
//
// Steps run in a fixed order no matter how they are listed:
//   lowercase -> emoji encoding -> punctuation removal -> stop words -> lemmatize
// Emoticon normalisation is part of the emoji step; it matches
// case-insensitively and only on whitespace-bounded chunks, so running it on
// the raw text before tokenization is equivalent to running it after
// lowercasing.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "modkit/data/bundled.hpp"
#include "modkit/error.hpp"
#include "modkit/lines.hpp"
#include "modkit/utf8.hpp"

namespace modkit::textprep {

struct TokenStream {
  std::vector<std::string> tokens;
  std::string source_id;

  bool operator==(const TokenStream&) const = default;
};

// ---------------------------------------------------------------------------
// Tables

/// The shorthand words added on top of the baseline stop-word list.
inline constexpr std::array<std::string_view, 7> k_shorthand_stopwords = {
    "u", "ur", "cause", "gonna", "im", "gon", "cant"};

class StopList {
 public:
  StopList() = default;
  StopList(std::unordered_set<std::string> base, std::vector<std::string> extensions)
      : base_(std::move(base)), extensions_(std::move(extensions)) {
    for (const auto& w : extensions_) all_.insert(w);
    for (const auto& w : base_) all_.insert(w);
  }

  /// Parses a one-word-per-line list (`#` comments allowed), adding the
  /// shorthand extensions.
  static StopList parse(std::string_view text) {
    std::unordered_set<std::string> base;
    for (auto line : table_lines(text)) {
      auto w = utf8::to_lower(line);
      if (!w.empty()) base.insert(std::move(w));
    }
    return StopList(std::move(base), {k_shorthand_stopwords.begin(), k_shorthand_stopwords.end()});
  }

  static const StopList& bundled() {
    static const StopList list = parse(bundled::k_stopwords);
    return list;
  }

  bool contains(std::string_view word) const { return all_.contains(std::string(word)); }
  const std::unordered_set<std::string>& base() const noexcept { return base_; }
  const std::vector<std::string>& extensions() const noexcept { return extensions_; }

 private:
  std::unordered_set<std::string> base_;
  std::vector<std::string> extensions_;
  std::unordered_set<std::string> all_;
};

struct SuffixRule {
  std::string suffix;
  std::string replacement;
  std::size_t min_stem = 0;
};

/// Dictionary-plus-suffix-rule lemmatizer.
///
/// A word is looked up in the exception table first. Otherwise the first
/// rule whose suffix matches (with at least `min_stem` characters left) and
/// whose output is itself a lemma is applied. A rule whose replacement equals
/// its suffix stops the search and keeps the word. Only tokens made of ASCII
/// lowercase letters are touched; everything else passes through.
///
/// Requiring rule outputs to be lemmas makes `lemma` idempotent.
class LemmaDictionary {
 public:
  LemmaDictionary() = default;

  LemmaDictionary(std::unordered_map<std::string, std::string> exceptions,
                  std::vector<SuffixRule> rules)
      : exceptions_(std::move(exceptions)), rules_(std::move(rules)) {
    for (const auto& r : rules_) {
      if (r.suffix.empty() || (r.replacement != r.suffix && r.replacement.size() >= r.suffix.size())) {
        throw Error(ErrorCode::BadConfig, "suffix rule '" + r.suffix + "' must shorten the word");
      }
    }
    for (const auto& [word, lemma_of_word] : exceptions_) {
      if (lemma(lemma_of_word) != lemma_of_word) {
        throw Error(ErrorCode::BadConfig,
                    "exception '" + word + "' maps to '" + lemma_of_word + "', which is not a lemma");
      }
    }
  }

  /// `word<TAB>lemma` exceptions plus `suffix<TAB>replacement<TAB>min_stem`
  /// rules; a replacement of `-` (or empty) deletes the suffix.
  static LemmaDictionary parse(std::string_view exceptions_text, std::string_view rules_text) {
    std::unordered_map<std::string, std::string> exceptions;
    for (auto line : table_lines(exceptions_text)) {
      const auto cols = split_tabs(line);
      if (cols.size() != 2 || cols[0].empty() || cols[1].empty()) {
        throw Error(ErrorCode::BadConfig, "bad lemma exception line: " + std::string(line));
      }
      exceptions.emplace(std::string(cols[0]), std::string(cols[1]));
    }
    std::vector<SuffixRule> rules;
    for (auto line : table_lines(rules_text)) {
      const auto cols = split_tabs(line);
      if (cols.size() != 3 || cols[0].empty()) {
        throw Error(ErrorCode::BadConfig, "bad suffix rule line: " + std::string(line));
      }
      SuffixRule r{std::string(cols[0]), std::string(cols[1]), 0};
      if (r.replacement == "-") r.replacement.clear();
      try {
        r.min_stem = std::stoul(std::string(cols[2]));
      } catch (const std::exception&) {
        throw Error(ErrorCode::BadConfig, "bad min_stem in suffix rule: " + std::string(line));
      }
      rules.push_back(std::move(r));
    }
    return LemmaDictionary(std::move(exceptions), std::move(rules));
  }

  static const LemmaDictionary& bundled() {
    static const LemmaDictionary dict = parse(bundled::k_lemma_exceptions, bundled::k_lemma_rules);
    return dict;
  }

  std::string lemma(std::string_view word) const {
    if (word.empty() || !std::all_of(word.begin(), word.end(), [](char c) { return c >= 'a' && c <= 'z'; })) {
      return std::string(word);
    }
    if (auto it = exceptions_.find(std::string(word)); it != exceptions_.end()) return it->second;
    for (const auto& r : rules_) {
      if (word.size() < r.suffix.size() || !word.ends_with(r.suffix)) continue;
      if (r.replacement == r.suffix) return std::string(word);
      const auto stem_len = word.size() - r.suffix.size();
      if (stem_len < r.min_stem) continue;
      std::string candidate(word.substr(0, stem_len));
      candidate += r.replacement;
      if (candidate.empty()) continue;
      if (lemma(candidate) == candidate) return candidate;
    }
    return std::string(word);
  }

  const std::unordered_map<std::string, std::string>& exceptions() const noexcept { return exceptions_; }
  const std::vector<SuffixRule>& rules() const noexcept { return rules_; }

 private:
  std::unordered_map<std::string, std::string> exceptions_;
  std::vector<SuffixRule> rules_;
};

namespace detail {

inline bool is_alias(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
           return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
         });
}

inline std::string ascii_fold(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace detail

/// Emoticon -> emoji alias map. Keys compare ASCII case-insensitively.
class EmoticonMap {
 public:
  EmoticonMap() = default;

  explicit EmoticonMap(const std::vector<std::pair<std::string, std::string>>& entries) {
    for (const auto& [key, alias] : entries) {
      const bool letters_only = std::all_of(key.begin(), key.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
      });
      if (key.empty() || letters_only) {
        throw Error(ErrorCode::BadConfig, "emoticon key '" + key + "' must contain a non-letter");
      }
      if (!detail::is_alias(alias)) {
        throw Error(ErrorCode::BadConfig, "emoticon alias '" + alias + "' must be lowercase snake_case");
      }
      entries_.insert_or_assign(detail::ascii_fold(key), alias);
    }
  }

  static EmoticonMap parse(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> entries;
    for (auto line : table_lines(text)) {
      const auto cols = split_tabs(line);
      if (cols.size() != 2) throw Error(ErrorCode::BadConfig, "bad emoticon line: " + std::string(line));
      entries.emplace_back(std::string(cols[0]), std::string(cols[1]));
    }
    return EmoticonMap(entries);
  }

  static const EmoticonMap& bundled() {
    static const EmoticonMap map = parse(bundled::k_emoticons);
    return map;
  }

  std::optional<std::string_view> lookup(std::string_view chunk) const {
    if (auto it = entries_.find(detail::ascii_fold(chunk)); it != entries_.end()) return it->second;
    return std::nullopt;
  }

  std::size_t size() const noexcept { return entries_.size(); }
  const std::map<std::string, std::string>& entries() const noexcept { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

inline constexpr std::string_view k_unknown_emoji = "unknown_emoji";

/// Emoji code point <-> alias table (one code point per emoji).
class EmojiTable {
 public:
  EmojiTable() = default;

  explicit EmojiTable(const std::vector<std::pair<char32_t, std::string>>& rows) {
    for (const auto& [cp, alias] : rows) {
      if (!detail::is_alias(alias)) {
        throw Error(ErrorCode::BadConfig, "emoji alias '" + alias + "' must be lowercase snake_case");
      }
      if (!by_alias_.emplace(alias, cp).second || !by_point_.emplace(cp, alias).second) {
        throw Error(ErrorCode::BadConfig, "duplicate emoji table row for alias '" + alias + "'");
      }
    }
  }

  static EmojiTable parse(std::string_view text) {
    std::vector<std::pair<char32_t, std::string>> rows;
    for (auto line : table_lines(text)) {
      const auto cols = split_tabs(line);
      if (cols.size() != 2) throw Error(ErrorCode::BadConfig, "bad emoji table line: " + std::string(line));
      const auto cps = utf8::decode(cols[0]);
      if (cps.empty()) throw Error(ErrorCode::BadConfig, "empty emoji in table");
      rows.emplace_back(cps.front(), std::string(cols[1]));
    }
    return EmojiTable(rows);
  }

  static const EmojiTable& bundled() {
    static const EmojiTable table = parse(bundled::k_emoji_aliases);
    return table;
  }

  std::optional<std::string_view> alias_of(char32_t cp) const {
    if (auto it = by_point_.find(cp); it != by_point_.end()) return it->second;
    return std::nullopt;
  }

  std::optional<char32_t> emoji_of(std::string_view alias) const {
    if (auto it = by_alias_.find(std::string(alias)); it != by_alias_.end()) return it->second;
    return std::nullopt;
  }

  bool knows_alias(std::string_view alias) const {
    return alias == k_unknown_emoji || by_alias_.contains(std::string(alias));
  }

  const std::map<char32_t, std::string>& rows() const noexcept { return by_point_; }
  std::size_t size() const noexcept { return by_point_.size(); }

 private:
  std::map<char32_t, std::string> by_point_;
  std::unordered_map<std::string, char32_t> by_alias_;
};

/// The tables a pipeline run needs. `bundled()` uses the compiled-in data.
struct Resources {
  StopList stoplist;
  LemmaDictionary lemmas;
  EmoticonMap emoticons;
  EmojiTable emojis;

  static const Resources& bundled() {
    static const Resources r{StopList::bundled(), LemmaDictionary::bundled(),
                             EmoticonMap::bundled(), EmojiTable::bundled()};
    return r;
  }
};

// ---------------------------------------------------------------------------
// Operations

enum class EmojiMode : std::uint8_t { MlPlain, BertDelimited };

namespace detail {

/// Length of a `:alias:` placeholder starting at `i`, or 0.
inline std::size_t placeholder_at(std::u32string_view cps, std::size_t i, const EmojiTable& table) {
  if (i >= cps.size() || cps[i] != U':') return 0;
  std::string alias;
  for (std::size_t j = i + 1; j < cps.size(); ++j) {
    const char32_t c = cps[j];
    if (c == U':') {
      return (!alias.empty() && table.knows_alias(alias)) ? j - i + 1 : 0;
    }
    if (!((c >= U'a' && c <= U'z') || (c >= U'0' && c <= U'9') || c == U'_')) return 0;
    alias.push_back(static_cast<char>(c));
  }
  return 0;
}

inline bool is_placeholder(std::string_view token, const EmojiTable& table) {
  const auto cps = utf8::decode(token);
  return !cps.empty() && placeholder_at(cps, 0, table) == cps.size();
}

inline bool starts_with_emoji(std::string_view token) {
  if (token.empty()) return false;
  std::size_t pos = 0;
  return utf8::is_emoji(utf8::next(token, pos));
}

/// Splits a run of plain (non-emoji, non-placeholder) text into a leading
/// punctuation run, the core, and a trailing punctuation run.
inline void split_plain(std::u32string_view cps, std::vector<std::string>& out) {
  if (cps.empty()) return;
  std::size_t b = 0;
  std::size_t e = cps.size();
  while (b < e && utf8::is_punct(cps[b])) ++b;
  if (b == e) {
    out.push_back(utf8::encode(cps));
    return;
  }
  while (e > b && utf8::is_punct(cps[e - 1])) --e;
  if (b > 0) out.push_back(utf8::encode(cps.substr(0, b)));
  out.push_back(utf8::encode(cps.substr(b, e - b)));
  if (e < cps.size()) out.push_back(utf8::encode(cps.substr(e)));
}

/// Tokenizes one whitespace-free chunk.
inline void tokenize_chunk(std::u32string_view chunk, const EmojiTable& table,
                           std::vector<std::string>& out) {
  std::size_t plain_start = 0;
  std::size_t i = 0;
  while (i < chunk.size()) {
    std::size_t len = 0;
    if (utf8::is_emoji(chunk[i])) {
      len = 1;
      while (i + len < chunk.size() && utf8::is_emoji_modifier(chunk[i + len])) ++len;
    } else {
      len = placeholder_at(chunk, i, table);
    }
    if (len == 0) {
      ++i;
      continue;
    }
    split_plain(chunk.substr(plain_start, i - plain_start), out);
    out.push_back(utf8::encode(chunk.substr(i, len)));
    i += len;
    plain_start = i;
  }
  split_plain(chunk.substr(plain_start), out);
}

}  // namespace detail

/// Splits on Unicode whitespace (and emoji joiners). Emoji become their own
/// tokens, `:alias:` placeholders stay whole, and punctuation runs at the
/// edges of a word are split off.
inline TokenStream tokenize(std::string_view text, std::string source_id = {},
                            const EmojiTable& table = EmojiTable::bundled()) {
  TokenStream out{{}, std::move(source_id)};
  const auto cps = utf8::decode(text);
  std::size_t start = 0;
  for (std::size_t i = 0; i <= cps.size(); ++i) {
    if (i == cps.size() || utf8::is_whitespace(cps[i]) || cps[i] == utf8::k_zwj) {
      if (i > start) {
        detail::tokenize_chunk(std::u32string_view(cps).substr(start, i - start), table, out.tokens);
      }
      start = i + 1;
    }
  }
  return out;
}

inline TokenStream lowercase(TokenStream stream) {
  for (auto& t : stream.tokens) t = utf8::to_lower(t);
  return stream;
}

/// Drops all-punctuation tokens and trims punctuation from token edges.
/// Emoji tokens and `:alias:` placeholders are kept as they are.
inline TokenStream remove_punctuation(TokenStream stream,
                                      const EmojiTable& table = EmojiTable::bundled()) {
  std::vector<std::string> kept;
  kept.reserve(stream.tokens.size());
  for (auto& t : stream.tokens) {
    if (detail::starts_with_emoji(t) || detail::is_placeholder(t, table)) {
      kept.push_back(std::move(t));
      continue;
    }
    const auto cps = utf8::decode(t);
    std::size_t b = 0;
    std::size_t e = cps.size();
    while (b < e && utf8::is_punct(cps[b])) ++b;
    while (e > b && utf8::is_punct(cps[e - 1])) --e;
    if (b < e) kept.push_back(utf8::encode(std::u32string_view(cps).substr(b, e - b)));
  }
  stream.tokens = std::move(kept);
  return stream;
}

inline TokenStream remove_stopwords(TokenStream stream, const StopList& stoplist) {
  std::erase_if(stream.tokens, [&](const std::string& t) { return stoplist.contains(t); });
  return stream;
}

inline TokenStream lemmatize(TokenStream stream, const LemmaDictionary& dict) {
  for (auto& t : stream.tokens) t = dict.lemma(t);
  return stream;
}

/// Replaces whitespace-bounded emoticons with `:alias:` placeholders.
inline std::string normalize_emoticons(std::string_view text, const EmoticonMap& map) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = pos;
    const char32_t cp = utf8::next(text, next);
    if (utf8::is_whitespace(cp)) {
      out.append(text.substr(pos, next - pos));
      pos = next;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size()) {
      std::size_t probe = end;
      if (utf8::is_whitespace(utf8::next(text, probe))) break;
      end = probe;
    }
    const auto chunk = text.substr(pos, end - pos);
    if (auto alias = map.lookup(chunk)) {
      out += ':';
      out += *alias;
      out += ':';
    } else {
      out += chunk;
    }
    pos = end;
  }
  return out;
}

struct EmojiReport {
  std::size_t encoded = 0;
  std::size_t unknown = 0;
};

/// Replaces emoji code points (with any trailing modifiers) by their alias:
/// `face_with_tears_of_joy` in MlPlain mode, `:face_with_tears_of_joy:` in
/// BertDelimited mode. Existing placeholders are converted to the mode's
/// form. Aliases are separated from adjacent text by a space. Emoji missing
/// from the table become `unknown_emoji` and are counted.
inline std::string encode_emojis(std::string_view text, EmojiMode mode,
                                 const EmojiTable& table = EmojiTable::bundled(),
                                 EmojiReport* report = nullptr) {
  const auto cps = utf8::decode(text);
  std::string out;
  out.reserve(text.size());
  const auto emit_alias = [&](std::string_view alias) {
    if (!out.empty() && !utf8::is_whitespace(static_cast<unsigned char>(out.back()))) {
      out += ' ';
    }
    if (mode == EmojiMode::BertDelimited) out += ':';
    out += alias;
    if (mode == EmojiMode::BertDelimited) out += ':';
  };
  bool pad_next = false;
  for (std::size_t i = 0; i < cps.size();) {
    const char32_t cp = cps[i];
    if (utf8::is_emoji(cp)) {
      const auto alias = table.alias_of(cp);
      emit_alias(alias ? *alias : k_unknown_emoji);
      if (report) {
        ++report->encoded;
        if (!alias) ++report->unknown;
      }
      ++i;
      while (i < cps.size() && utf8::is_emoji_modifier(cps[i])) ++i;
      if (i < cps.size() && cps[i] == utf8::k_zwj) ++i;
      pad_next = true;
      continue;
    }
    if (const auto len = detail::placeholder_at(cps, i, table); len > 0) {
      emit_alias(utf8::encode(std::u32string_view(cps).substr(i + 1, len - 2)));
      i += len;
      pad_next = true;
      continue;
    }
    if (pad_next && !utf8::is_whitespace(cp)) out += ' ';
    pad_next = false;
    utf8::append(out, cp);
    ++i;
  }
  return out;
}

/// Token-level emoji step: encodes each token, re-splitting if an alias had
/// to be separated from neighbouring text.
inline TokenStream encode_emojis(TokenStream stream, EmojiMode mode,
                                 const EmojiTable& table = EmojiTable::bundled(),
                                 EmojiReport* report = nullptr) {
  std::vector<std::string> out;
  out.reserve(stream.tokens.size());
  for (const auto& t : stream.tokens) {
    auto encoded = encode_emojis(t, mode, table, report);
    if (encoded.find(' ') == std::string::npos) {
      out.push_back(std::move(encoded));
      continue;
    }
    std::string_view rest = encoded;
    while (!rest.empty()) {
      const auto sp = rest.find(' ');
      if (sp != 0) out.emplace_back(rest.substr(0, sp));
      if (sp == std::string_view::npos) break;
      rest.remove_prefix(sp + 1);
    }
  }
  stream.tokens = std::move(out);
  return stream;
}

enum class Step : std::uint8_t {
  StopwordRemoval,
  EmojiEncoding,
  Lowercasing,
  Lemmatization,
  PunctuationRemoval,
};

constexpr std::string_view to_string(Step s) {
  switch (s) {
    case Step::StopwordRemoval: return "stopwords";
    case Step::EmojiEncoding: return "emoji";
    case Step::Lowercasing: return "lowercase";
    case Step::Lemmatization: return "lemmatize";
    case Step::PunctuationRemoval: return "punctuation";
  }
  return "";
}

inline std::optional<Step> parse_step(std::string_view s) {
  for (auto step : {Step::StopwordRemoval, Step::EmojiEncoding, Step::Lowercasing,
                    Step::Lemmatization, Step::PunctuationRemoval}) {
    if (s == to_string(step)) return step;
  }
  return std::nullopt;
}

/// Which steps to run. Execution order is fixed; see the file comment.
class PreprocessConfig {
 public:
  PreprocessConfig() = default;

  PreprocessConfig(std::initializer_list<Step> steps, EmojiMode mode = EmojiMode::MlPlain)
      : PreprocessConfig(std::vector<Step>(steps), mode) {}

  explicit PreprocessConfig(const std::vector<Step>& steps, EmojiMode mode = EmojiMode::MlPlain)
      : emoji_mode_(mode) {
    for (auto s : steps) {
      const auto bit = static_cast<std::uint8_t>(1u << static_cast<unsigned>(s));
      if (mask_ & bit) {
        throw Error(ErrorCode::BadConfig, "step '" + std::string(to_string(s)) + "' listed twice");
      }
      mask_ |= bit;
    }
  }

  static PreprocessConfig all(EmojiMode mode = EmojiMode::MlPlain) {
    return {{Step::StopwordRemoval, Step::EmojiEncoding, Step::Lowercasing, Step::Lemmatization,
             Step::PunctuationRemoval},
            mode};
  }

  bool has(Step s) const noexcept { return mask_ & (1u << static_cast<unsigned>(s)); }
  EmojiMode emoji_mode() const noexcept { return emoji_mode_; }

  /// Selected steps in execution order.
  std::vector<Step> steps() const {
    std::vector<Step> out;
    for (auto s : k_execution_order) {
      if (has(s)) out.push_back(s);
    }
    return out;
  }

  bool operator==(const PreprocessConfig&) const = default;

  static constexpr std::array<Step, 5> k_execution_order = {
      Step::Lowercasing, Step::EmojiEncoding, Step::PunctuationRemoval, Step::StopwordRemoval,
      Step::Lemmatization};

 private:
  std::uint8_t mask_ = 0;
  EmojiMode emoji_mode_ = EmojiMode::MlPlain;
};

inline TokenStream run_pipeline(std::string_view text, const PreprocessConfig& config,
                                const Resources& res = Resources::bundled(),
                                std::string source_id = {}, EmojiReport* report = nullptr) {
  std::string normalized;
  if (config.has(Step::EmojiEncoding)) {
    normalized = normalize_emoticons(text, res.emoticons);
    text = normalized;
  }
  auto stream = tokenize(text, std::move(source_id), res.emojis);
  for (auto step : config.steps()) {
    switch (step) {
      case Step::Lowercasing: stream = lowercase(std::move(stream)); break;
      case Step::EmojiEncoding:
        stream = encode_emojis(std::move(stream), config.emoji_mode(), res.emojis, report);
        break;
      case Step::PunctuationRemoval: stream = remove_punctuation(std::move(stream), res.emojis); break;
      case Step::StopwordRemoval: stream = remove_stopwords(std::move(stream), res.stoplist); break;
      case Step::Lemmatization: stream = lemmatize(std::move(stream), res.lemmas); break;
    }
  }
  return stream;
}

}  // namespace modkit::textprep
