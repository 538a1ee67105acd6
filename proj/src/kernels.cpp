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

#include <omp.h>

#include <limits>

#include "kernel_common.hpp"
#include "zsba/kernels.hpp"

namespace zsba::par {
namespace {

int thread_count(int workers) {
  return workers > 0 ? workers : omp_get_max_threads();
}

}  // namespace

std::vector<RowScore> score_rows(std::span<const Embedding* const> queries,
                                 std::span<const Embedding> vocab, int workers) {
  std::vector<RowScore> rows(queries.size());
  const auto n = static_cast<std::ptrdiff_t>(queries.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count(workers))
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    rows[static_cast<std::size_t>(i)] =
        detail::score_one(queries[static_cast<std::size_t>(i)], vocab);
  }
  return rows;
}

SegmentationMap paint_labels(const MaskSet& masks,
                             std::span<const std::size_t> labels, int workers) {
  detail::check_paint_inputs(masks, labels);
  SegmentationMap out(masks.width, masks.height);
  const std::size_t width = masks.width;
  const auto height = static_cast<std::ptrdiff_t>(masks.height);
#pragma omp parallel for schedule(static) num_threads(thread_count(workers))
  for (std::ptrdiff_t row = 0; row < height; ++row) {
    const std::size_t begin = static_cast<std::size_t>(row) * width;
    for (std::size_t j = 0; j < masks.masks.size(); ++j) {
      const std::uint8_t* src = masks.masks[j].pixels.data() + begin;
      std::uint8_t* dst = out.labels.data() + begin;
      const auto label = static_cast<std::uint8_t>(labels[j]);
      for (std::size_t col = 0; col < width; ++col) {
        if (src[col] != 0) dst[col] = label;
      }
    }
  }
  return out;
}

void accumulate_confusion(std::span<const std::uint8_t> truth,
                          std::span<const std::uint8_t> predicted,
                          UnlabeledPolicy policy, ConfusionMatrix& into,
                          int workers) {
  detail::check_confusion_inputs(truth, predicted);
  const std::size_t classes = into.num_classes();
  const auto n = static_cast<std::ptrdiff_t>(truth.size());
  std::ptrdiff_t first_bad = std::numeric_limits<std::ptrdiff_t>::max();
  ConfusionMatrix total(classes);

#pragma omp parallel num_threads(thread_count(workers))
  {
    ConfusionMatrix local(classes);
#pragma omp for schedule(static) reduction(min : first_bad)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const std::uint8_t t = truth[static_cast<std::size_t>(i)];
      const std::uint8_t p = predicted[static_cast<std::size_t>(i)];
      if (!detail::valid_pair(t, p, classes)) {
        if (i < first_bad) first_bad = i;
        continue;
      }
      if (t == kUnlabeled) continue;
      if (p == kUnlabeled) {
        if (policy == UnlabeledPolicy::kCountAsMiss) local.add(t, classes);
        continue;
      }
      local.add(t, p);
    }
#pragma omp critical(zsba_confusion_merge)
    total += local;
  }

  if (first_bad != std::numeric_limits<std::ptrdiff_t>::max()) {
    const auto i = static_cast<std::size_t>(first_bad);
    detail::bad_label(i, truth[i], predicted[i], classes);
  }
  into += total;
}

}  // namespace zsba::par
