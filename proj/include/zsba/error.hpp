/* Copyright 2026 The ZSBA Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <stdexcept>
#include <string>

namespace zsba {

enum class ErrorKind {
  kZeroVector,
  kNonFinite,
  kDimensionMismatch,
  kEmptyVocabulary,
  kEmptyScores,
  kIo,
  kParse,
  kValidation,
  kPrecondition,
  kBadMagic,
  kBadVersion,
  kTruncatedFile,
  kTrailingData,
  kDuplicateKey,
  kMissingKey,
  kRleLengthMismatch,
  kOverlappingMasks,
  kEmptyMask,
  kManifest,
  kRowCountMismatch,
  kShapeMismatch,
  kLengthMismatch,
  kUnknownSample,
  kEmptyDataset,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library. The kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  // what() without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

}  // namespace zsba
