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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zsba/classify.hpp"
#include "zsba/confusion.hpp"
#include "zsba/kernels.hpp"
#include "zsba/manifest.hpp"
#include "zsba/raster.hpp"
#include "zsba/vocabulary.hpp"

namespace zsba {

enum class ReportKind { kClassification, kSegmentation };

struct ClassMetric {
  std::string name;
  // Ground-truth samples (classification) or pixels (segmentation).
  std::uint64_t count = 0;
  // Accuracy or IoU in percent. Empty for a classification class with no
  // samples, or a segmentation class absent from both truth and prediction.
  std::optional<double> value;

  bool operator==(const ClassMetric&) const = default;
};

// All percentages are kept at full double precision; rounding happens only in
// report_to_table.
struct EvalReport {
  ReportKind kind = ReportKind::kClassification;
  std::string task_id;
  std::vector<ClassMetric> per_class;
  // Pooled accuracy: correct samples (or pixels) over all evaluated ones.
  double micro_average = 0.0;
  // Unweighted mean over the per-class values that are set.
  std::optional<double> macro_average;  // classification
  std::optional<double> mean_iou;       // segmentation
  ConfusionMatrix confusion;

  bool operator==(const EvalReport&) const = default;
};

// Derives every metric from the counts. Throws kEmptyDataset when nothing
// was counted.
EvalReport report_from_confusion(ReportKind kind, std::string task_id,
                                 const std::vector<std::string>& class_names,
                                 const ConfusionMatrix& confusion);

// Scores results against the manifest's ground truth. Results for samples
// without ground truth are skipped. Throws kUnknownSample, kEmptyDataset.
EvalReport classification_report(std::span<const ClassificationResult> results,
                                 const DatasetManifest& manifest,
                                 const TaskSpec& task);

// Dataset-level confusion over all pixels of all map pairs. Ground-truth
// kUnlabeled pixels are ignored. Throws kLengthMismatch, kShapeMismatch.
ConfusionMatrix segmentation_confusion(std::span<const SegmentationMap> predicted,
                                       std::span<const SegmentationMap> truth,
                                       std::size_t num_classes,
                                       UnlabeledPolicy policy, int workers = 1);

EvalReport segmentation_report(std::span<const SegmentationMap> predicted,
                               std::span<const SegmentationMap> truth,
                               const TaskSpec& task,
                               UnlabeledPolicy policy = UnlabeledPolicy::kCountAsMiss,
                               int workers = 1);

// Report over the union of two disjoint evaluations (confusion counts add).
// Throws kShapeMismatch for reports of different tasks or kinds.
EvalReport merge_reports(const EvalReport& a, const EvalReport& b);

// Aligned plain-text table, one decimal place.
std::string report_to_table(const EvalReport& report);

std::string report_to_json(const EvalReport& report);
// Throws kParse.
EvalReport report_from_json(std::string_view json_text);

}  // namespace zsba
