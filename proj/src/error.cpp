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

#include "zsba/error.hpp"

namespace zsba {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kZeroVector: return "ZeroVector";
    case ErrorKind::kNonFinite: return "NonFinite";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kEmptyVocabulary: return "EmptyVocabulary";
    case ErrorKind::kEmptyScores: return "EmptyScores";
    case ErrorKind::kIo: return "IoError";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kValidation: return "ValidationError";
    case ErrorKind::kPrecondition: return "PreconditionViolation";
    case ErrorKind::kBadMagic: return "BadMagic";
    case ErrorKind::kBadVersion: return "BadVersion";
    case ErrorKind::kTruncatedFile: return "TruncatedFile";
    case ErrorKind::kTrailingData: return "TrailingData";
    case ErrorKind::kDuplicateKey: return "DuplicateKey";
    case ErrorKind::kMissingKey: return "MissingKey";
    case ErrorKind::kRleLengthMismatch: return "RleLengthMismatch";
    case ErrorKind::kOverlappingMasks: return "OverlappingMasks";
    case ErrorKind::kEmptyMask: return "EmptyMask";
    case ErrorKind::kManifest: return "ManifestError";
    case ErrorKind::kRowCountMismatch: return "RowCountMismatch";
    case ErrorKind::kShapeMismatch: return "ShapeMismatch";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kUnknownSample: return "UnknownSample";
    case ErrorKind::kEmptyDataset: return "EmptyDataset";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      message_(message) {}

}  // namespace zsba
