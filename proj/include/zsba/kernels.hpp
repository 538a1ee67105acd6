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

// Data-parallel inner loops of the pipeline. Every kernel in `par` has a
// serial twin in `ref` with the same contract; the serial versions exist for
// testing and benchmarking and must stay result-identical.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zsba/confusion.hpp"
#include "zsba/error.hpp"
#include "zsba/mask_set.hpp"
#include "zsba/raster.hpp"
#include "zsba/similarity.hpp"

namespace zsba {

// Outcome of scoring one query embedding against a vocabulary. A row that
// failed carries the error instead of scores.
struct RowScore {
  ScoreVector scores;
  std::size_t best = 0;
  std::optional<Error> error;
};

enum class UnlabeledPolicy {
  kCountAsMiss,  // unlabeled prediction on a labeled pixel is a false negative
  kIgnore,       // pixels without a prediction are left out entirely
};

namespace par {

// workers <= 0 uses the OpenMP default thread count.
std::vector<RowScore> score_rows(std::span<const Embedding* const> queries,
                                 std::span<const Embedding> vocab, int workers);

// Paints labels[j] onto every pixel of masks.masks[j]; uncovered pixels are
// kUnlabeled. Masks must already be non-overlapping.
SegmentationMap paint_labels(const MaskSet& masks,
                             std::span<const std::size_t> labels, int workers);

// Adds every (truth, predicted) pixel pair to `into`. Truth kUnlabeled is an
// ignore region. Throws kValidation for labels outside the class range.
void accumulate_confusion(std::span<const std::uint8_t> truth,
                          std::span<const std::uint8_t> predicted,
                          UnlabeledPolicy policy, ConfusionMatrix& into,
                          int workers);

}  // namespace par

namespace ref {

std::vector<RowScore> score_rows(std::span<const Embedding* const> queries,
                                 std::span<const Embedding> vocab);

SegmentationMap paint_labels(const MaskSet& masks,
                             std::span<const std::size_t> labels);

void accumulate_confusion(std::span<const std::uint8_t> truth,
                          std::span<const std::uint8_t> predicted,
                          UnlabeledPolicy policy, ConfusionMatrix& into);

}  // namespace ref

}  // namespace zsba
