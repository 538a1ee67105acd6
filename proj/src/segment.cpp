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

#include "zsba/segment.hpp"

#include "zsba/error.hpp"
#include "zsba/kernels.hpp"

namespace zsba {

RasterImage apply_mask(const RasterImage& image, const BinaryMask& mask) {
  if (image.width != mask.width || image.height != mask.height ||
      mask.pixels.size() != static_cast<std::size_t>(image.width) * image.height) {
    throw Error(ErrorKind::kDimensionMismatch,
                "image is " + std::to_string(image.width) + "x" +
                    std::to_string(image.height) + ", mask \"" + mask.id + "\" is " +
                    std::to_string(mask.width) + "x" + std::to_string(mask.height));
  }
  RasterImage out = image;
  for (std::size_t p = 0; p < mask.pixels.size(); ++p) {
    if (mask.pixels[p] == 0) {
      out.pixels[3 * p] = out.pixels[3 * p + 1] = out.pixels[3 * p + 2] = 0;
    }
  }
  return out;
}

MaskScores score_masks(const std::string& image_id, const MaskSet& masks,
                       const TaskSpec& task, const EmbeddingStore& store,
                       int workers) {
  if (route_task(task) != TaskKind::kSegmentation) {
    throw Error(ErrorKind::kPrecondition,
                "task \"" + task.task_id + "\" is a " + to_string(task.kind) +
                    " task, not segmentation");
  }
  const std::vector<Embedding> vocab = category_embeddings(task, store);

  std::vector<const Embedding*> queries;
  queries.reserve(masks.masks.size());
  for (const BinaryMask& m : masks.masks) {
    queries.push_back(&image_embedding(store, image_id, m.id));
  }

  MaskScores out;
  for (RowScore& row : par::score_rows(queries, vocab, workers)) {
    if (row.error) {
      throw Error(row.error->kind(), "image \"" + image_id + "\": " + row.error->message());
    }
    out.labels.push_back(row.best);
    out.rows.push_back(std::move(row.scores));
  }
  return out;
}

SegmentationMap compose_segmentation(const MaskSet& masks,
                                     const MaskScores& mask_scores, int workers) {
  if (mask_scores.rows.size() != masks.masks.size()) {
    throw Error(ErrorKind::kRowCountMismatch,
                std::to_string(mask_scores.rows.size()) + " score rows for " +
                    std::to_string(masks.masks.size()) + " masks");
  }
  check_masks(masks);
  std::vector<std::size_t> labels;
  labels.reserve(mask_scores.rows.size());
  for (const ScoreVector& row : mask_scores.rows) labels.push_back(argmax_index(row));
  return par::paint_labels(masks, labels, workers);
}

SegmentationMap segment_image(const std::string& image_id, const MaskSet& masks,
                              const TaskSpec& task, const EmbeddingStore& store,
                              int workers) {
  check_masks(masks);
  return compose_segmentation(masks, score_masks(image_id, masks, task, store, workers),
                              workers);
}

}  // namespace zsba
