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

#include "kernel_common.hpp"
#include "zsba/kernels.hpp"

namespace zsba::ref {

std::vector<RowScore> score_rows(std::span<const Embedding* const> queries,
                                 std::span<const Embedding> vocab) {
  std::vector<RowScore> rows;
  rows.reserve(queries.size());
  for (const Embedding* q : queries) rows.push_back(detail::score_one(q, vocab));
  return rows;
}

SegmentationMap paint_labels(const MaskSet& masks,
                             std::span<const std::size_t> labels) {
  detail::check_paint_inputs(masks, labels);
  SegmentationMap out(masks.width, masks.height);
  for (std::size_t j = 0; j < masks.masks.size(); ++j) {
    const BinaryMask& mask = masks.masks[j];
    for (std::size_t p = 0; p < mask.pixels.size(); ++p) {
      if (mask.pixels[p] != 0) out.labels[p] = static_cast<std::uint8_t>(labels[j]);
    }
  }
  return out;
}

void accumulate_confusion(std::span<const std::uint8_t> truth,
                          std::span<const std::uint8_t> predicted,
                          UnlabeledPolicy policy, ConfusionMatrix& into) {
  detail::check_confusion_inputs(truth, predicted);
  const std::size_t classes = into.num_classes();
  ConfusionMatrix total(classes);
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const std::uint8_t t = truth[i];
    const std::uint8_t p = predicted[i];
    if (!detail::valid_pair(t, p, classes)) detail::bad_label(i, t, p, classes);
    if (t == kUnlabeled) continue;
    if (p == kUnlabeled) {
      if (policy == UnlabeledPolicy::kCountAsMiss) total.add(t, classes);
      continue;
    }
    total.add(t, p);
  }
  into += total;
}

}  // namespace zsba::ref
