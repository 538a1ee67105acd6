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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "zsba/error.hpp"
#include "zsba/kernels.hpp"

namespace zsba::detail {

inline RowScore score_one(const Embedding* query,
                          std::span<const Embedding> vocab) {
  RowScore row;
  if (query == nullptr) {
    row.error = Error(ErrorKind::kPrecondition, "no query embedding");
    return row;
  }
  try {
    row.scores = score_against(*query, vocab);
    row.best = argmax_index(row.scores);
  } catch (const Error& e) {
    row.scores.clear();
    row.error = e;
  }
  return row;
}

inline void check_paint_inputs(const MaskSet& masks,
                               std::span<const std::size_t> labels) {
  if (labels.size() != masks.masks.size()) {
    throw Error(ErrorKind::kRowCountMismatch,
                std::to_string(labels.size()) + " labels for " +
                    std::to_string(masks.masks.size()) + " masks");
  }
  for (std::size_t j = 0; j < labels.size(); ++j) {
    if (labels[j] >= kUnlabeled) {
      throw Error(ErrorKind::kValidation,
                  "label " + std::to_string(labels[j]) + " does not fit in 8 bits");
    }
    if (masks.masks[j].pixels.size() != masks.pixel_count()) {
      throw Error(ErrorKind::kShapeMismatch, "mask \"" + masks.masks[j].id +
                                                 "\" has the wrong pixel count");
    }
  }
}

inline void check_confusion_inputs(std::span<const std::uint8_t> truth,
                                   std::span<const std::uint8_t> predicted) {
  if (truth.size() != predicted.size()) {
    throw Error(ErrorKind::kShapeMismatch,
                std::to_string(truth.size()) + " truth pixels vs " +
                    std::to_string(predicted.size()) + " predicted");
  }
}

[[noreturn]] inline void bad_label(std::size_t pixel, std::uint8_t truth,
                                   std::uint8_t predicted, std::size_t classes) {
  throw Error(ErrorKind::kValidation,
              "pixel " + std::to_string(pixel) + " has labels (truth " +
                  std::to_string(truth) + ", predicted " +
                  std::to_string(predicted) + ") outside " +
                  std::to_string(classes) + " classes");
}

inline bool valid_pair(std::uint8_t truth, std::uint8_t predicted,
                       std::size_t classes) {
  return (truth == kUnlabeled || truth < classes) &&
         (predicted == kUnlabeled || predicted < classes);
}

}  // namespace zsba::detail
