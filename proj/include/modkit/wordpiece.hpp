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

// WordPiece subword tokenization with vocabulary augmentation, and the
// fragmentation metric used to measure how well a vocabulary covers a corpus.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "modkit/data/bundled.hpp"
#include "modkit/error.hpp"
#include "modkit/lines.hpp"
#include "modkit/utf8.hpp"

namespace modkit::wordpiece {

inline constexpr std::string_view k_unk = "[UNK]";
inline constexpr std::string_view k_cls = "[CLS]";
inline constexpr std::string_view k_sep = "[SEP]";
inline constexpr std::string_view k_pad = "[PAD]";
inline constexpr std::string_view k_continuation = "##";
inline constexpr std::size_t k_default_max_length = 150;
/// Words longer than this many code points encode as [UNK].
inline constexpr std::size_t k_max_word_chars = 100;

class Vocab {
 public:
  Vocab() = default;

  explicit Vocab(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty()) throw Error(ErrorCode::EmptyVocab, "vocabulary has no tokens");
    ids_.reserve(tokens_.size());
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      if (tokens_[i].empty()) throw Error(ErrorCode::BadToken, "empty token at id " + std::to_string(i));
      if (!ids_.emplace(tokens_[i], static_cast<std::uint32_t>(i)).second) {
        throw Error(ErrorCode::BadToken, "token '" + tokens_[i] + "' appears twice");
      }
    }
    for (auto special : {k_unk, k_cls, k_sep, k_pad}) {
      if (!ids_.contains(std::string(special))) {
        throw Error(ErrorCode::BadToken, "vocabulary lacks " + std::string(special));
      }
    }
  }

  /// One token per line; the line number is the id.
  static Vocab parse(std::string_view text) {
    std::vector<std::string> tokens;
    for (auto line : split_lines(text)) tokens.emplace_back(line);
    return Vocab(std::move(tokens));
  }

  static const Vocab& bundled() {
    static const Vocab v = parse(bundled::k_vocab);
    return v;
  }

  std::string to_text() const {
    std::string out;
    for (const auto& t : tokens_) {
      out += t;
      out += '\n';
    }
    return out;
  }

  std::optional<std::uint32_t> id(std::string_view token) const {
    if (auto it = ids_.find(std::string(token)); it != ids_.end()) return it->second;
    return std::nullopt;
  }
  bool contains(std::string_view token) const { return ids_.contains(std::string(token)); }
  const std::string& token(std::uint32_t id) const { return tokens_.at(id); }
  std::size_t size() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }

  std::uint32_t unk_id() const { return *id(k_unk); }
  std::uint32_t cls_id() const { return *id(k_cls); }
  std::uint32_t sep_id() const { return *id(k_sep); }
  std::uint32_t pad_id() const { return *id(k_pad); }

  bool operator==(const Vocab& o) const { return tokens_ == o.tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::uint32_t> ids_;
};

/// Returns a vocabulary with `new_tokens` appended (lowercased, skipping
/// ones already present). Existing ids never change.
inline Vocab augment_vocab(const Vocab& vocab, std::span<const std::string> new_tokens) {
  auto tokens = vocab.tokens();
  std::unordered_map<std::string, bool> present;
  for (const auto& t : tokens) present.emplace(t, true);
  for (const auto& raw : new_tokens) {
    if (raw.empty()) throw Error(ErrorCode::BadToken, "cannot add an empty token");
    for (std::size_t pos = 0; pos < raw.size();) {
      if (utf8::is_whitespace(utf8::next(raw, pos))) {
        throw Error(ErrorCode::BadToken, "token '" + raw + "' contains whitespace");
      }
    }
    auto tok = utf8::to_lower(raw);
    if (present.emplace(tok, true).second) tokens.push_back(std::move(tok));
  }
  return Vocab(std::move(tokens));
}

inline Vocab augment_vocab(const Vocab& vocab, std::initializer_list<std::string> new_tokens) {
  const std::vector<std::string> v(new_tokens);
  return augment_vocab(vocab, std::span<const std::string>(v));
}

/// Greedy longest-match-first segmentation of one word. Continuation pieces
/// carry the `##` prefix. Returns {"[UNK]"} when some position has no match.
inline std::vector<std::string> segment_word(std::string_view word, const Vocab& vocab) {
  const auto cps = utf8::decode(word);
  if (cps.size() > k_max_word_chars) return {std::string(k_unk)};
  // Byte offset of each code point boundary.
  std::vector<std::size_t> offsets;
  offsets.reserve(cps.size() + 1);
  for (std::size_t pos = 0; pos < word.size();) {
    offsets.push_back(pos);
    utf8::next(word, pos);
  }
  offsets.push_back(word.size());

  std::vector<std::string> pieces;
  std::size_t start = 0;
  std::string candidate;
  while (start < cps.size()) {
    std::size_t end = cps.size();
    bool found = false;
    while (end > start) {
      candidate.clear();
      if (start > 0) candidate = k_continuation;
      candidate.append(word.substr(offsets[start], offsets[end] - offsets[start]));
      if (vocab.contains(candidate)) {
        found = true;
        break;
      }
      --end;
    }
    if (!found) return {std::string(k_unk)};
    pieces.push_back(candidate);
    start = end;
  }
  return pieces;
}

inline std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> words;
  std::string cur;
  for (std::size_t pos = 0; pos < text.size();) {
    const auto begin = pos;
    const char32_t cp = utf8::next(text, pos);
    if (utf8::is_whitespace(cp)) {
      if (!cur.empty()) words.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.append(text.substr(begin, pos - begin));
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

struct Encoding {
  std::vector<std::uint32_t> ids;
  std::vector<std::string> tokens;
  bool truncated = false;

  bool operator==(const Encoding&) const = default;
};

/// Encodes preprocessed text as [CLS] pieces... [SEP]. `max_length` counts
/// the framing tokens; overflow is truncated (and flagged) before [SEP].
/// With `pad`, the output is filled to `max_length` with [PAD].
inline Encoding wordpiece_encode(std::string_view text, const Vocab& vocab,
                                 std::size_t max_length = k_default_max_length, bool pad = false) {
  if (vocab.empty()) throw Error(ErrorCode::EmptyVocab, "cannot encode with an empty vocabulary");
  std::vector<std::string> pieces;
  for (const auto& w : split_whitespace(text)) {
    auto p = segment_word(w, vocab);
    pieces.insert(pieces.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  Encoding enc;
  const auto push = [&](std::string tok) {
    enc.ids.push_back(*vocab.id(tok));
    enc.tokens.push_back(std::move(tok));
  };
  if (max_length < 2) {
    if (max_length == 1) push(std::string(k_cls));
    enc.truncated = true;
    return enc;
  }
  const std::size_t room = max_length - 2;
  enc.truncated = pieces.size() > room;
  if (enc.truncated) pieces.resize(room);
  push(std::string(k_cls));
  for (auto& p : pieces) push(std::move(p));
  push(std::string(k_sep));
  if (pad) {
    while (enc.tokens.size() < max_length) push(std::string(k_pad));
  }
  return enc;
}

struct Fragmentation {
  double pieces_per_word = 0;
  double split_word_fraction = 0;
  std::size_t words = 0;
  std::size_t pieces = 0;
  std::size_t split_words = 0;
};

/// Pieces emitted per whitespace word (an [UNK] counts as one piece), and
/// the share of words that were split into two or more pieces or became
/// [UNK]. Framing tokens are not counted.
inline Fragmentation fragmentation_rate(std::span<const std::string> corpus, const Vocab& vocab) {
  if (corpus.empty()) throw Error(ErrorCode::EmptyCorpus, "fragmentation of an empty corpus");
  if (vocab.empty()) throw Error(ErrorCode::EmptyVocab, "cannot segment with an empty vocabulary");
  Fragmentation f;
  for (const auto& text : corpus) {
    for (const auto& w : split_whitespace(text)) {
      const auto p = segment_word(w, vocab);
      ++f.words;
      f.pieces += p.size();
      if (p.size() >= 2 || p.front() == k_unk) ++f.split_words;
    }
  }
  if (f.words > 0) {
    f.pieces_per_word = static_cast<double>(f.pieces) / static_cast<double>(f.words);
    f.split_word_fraction = static_cast<double>(f.split_words) / static_cast<double>(f.words);
  }
  return f;
}

}  // namespace modkit::wordpiece
