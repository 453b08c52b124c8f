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

#include <stdexcept>
#include <string>
#include <string_view>

namespace modkit {

enum class ErrorCode {
  // corpus
  MalformedJson,
  SchemaViolation,
  DuplicateId,
  UnknownCommentId,
  EmptyClass,
  BadRatios,
  // analytics
  BadN,
  BadBucketWidth,
  EmptyDataset,
  EmptyTable,
  // vectorize / tokenizer
  EmptyCorpus,
  EmptyVocab,
  BadToken,
  // models
  SingleClass,
  BadAlpha,
  NonFinite,
  // eval
  LengthMismatch,
  Empty,
  // plumbing
  IoError,
  BadConfig,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedJson: return "MalformedJson";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnknownCommentId: return "UnknownCommentId";
    case ErrorCode::EmptyClass: return "EmptyClass";
    case ErrorCode::BadRatios: return "BadRatios";
    case ErrorCode::BadN: return "BadN";
    case ErrorCode::BadBucketWidth: return "BadBucketWidth";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::EmptyTable: return "EmptyTable";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::EmptyVocab: return "EmptyVocab";
    case ErrorCode::BadToken: return "BadToken";
    case ErrorCode::SingleClass: return "SingleClass";
    case ErrorCode::BadAlpha: return "BadAlpha";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

/// Process exit status for a failure of the given kind.
/// 2 = usage/config (including unreadable paths), 3 = data, 4 = numeric.
constexpr int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::IoError:
    case ErrorCode::BadConfig:
    case ErrorCode::BadRatios:
    case ErrorCode::BadN:
    case ErrorCode::BadBucketWidth:
    case ErrorCode::BadAlpha:
      return 2;
    case ErrorCode::NonFinite:
      return 4;
    default:
      return 3;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace modkit
