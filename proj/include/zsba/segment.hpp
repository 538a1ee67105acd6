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
#include <string>
#include <vector>

#include "zsba/embedding_store.hpp"
#include "zsba/mask_set.hpp"
#include "zsba/raster.hpp"
#include "zsba/similarity.hpp"
#include "zsba/vocabulary.hpp"

namespace zsba {

// Zero-fills every pixel outside the mask. Throws kDimensionMismatch.
RasterImage apply_mask(const RasterImage& image, const BinaryMask& mask);

// rows[j][k] is the similarity of mask j's masked-image embedding to the
// prompt embedding of category k; labels[j] is the row's argmax.
struct MaskScores {
  std::vector<ScoreVector> rows;
  std::vector<std::size_t> labels;
};

// Throws kPrecondition for a classification task, kMissingKey naming the
// image and mask for an unexported masked-image embedding.
MaskScores score_masks(const std::string& image_id, const MaskSet& masks,
                       const TaskSpec& task, const EmbeddingStore& store,
                       int workers = 1);

// Labels every covered pixel with the argmax of its (unique) mask's score row;
// uncovered pixels get kUnlabeled. `labels` is not consulted. Throws kRowCountMismatch,
// kOverlappingMasks.
SegmentationMap compose_segmentation(const MaskSet& masks,
                                     const MaskScores& mask_scores,
                                     int workers = 1);

SegmentationMap segment_image(const std::string& image_id, const MaskSet& masks,
                              const TaskSpec& task, const EmbeddingStore& store,
                              int workers = 1);

}  // namespace zsba
