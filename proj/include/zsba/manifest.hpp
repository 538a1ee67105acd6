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
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zsba/error.hpp"
#include "zsba/vocabulary.hpp"

namespace zsba {

struct ManifestSample {
  std::string image_id;
  // Classification ground truth (category index).
  std::optional<std::size_t> ground_truth;
  // Segmentation ground truth: PGM label map, resolved against the manifest's
  // directory.
  std::optional<std::filesystem::path> gt_map;
};

// Labeled (or unlabeled) sample list for one task. JSON form:
//   {"task_id": str,
//    "samples": [{"image_id": str,
//                 "ground_truth": int | category-name,   (optional)
//                 "gt_map": relative-or-absolute path}]} (optional)
struct DatasetManifest {
  std::string task_id;
  std::vector<ManifestSample> samples;

  const ManifestSample* find(std::string_view image_id) const;
  bool any_ground_truth() const;
};

// Throws kManifest for duplicate ids, out-of-range ground truth, or a task id
// that does not match.
void validate_manifest(const DatasetManifest& manifest, const TaskSpec& task);

DatasetManifest parse_manifest(std::string_view json_text, const TaskSpec& task,
                               const std::filesystem::path& base_dir = {},
                               std::string_view source = "<memory>");
DatasetManifest load_manifest(const std::filesystem::path& path,
                              const TaskSpec& task);

std::string serialize_manifest(const DatasetManifest& manifest);

// A sample that could not be processed; batch drivers collect these instead
// of aborting.
struct SampleFailure {
  std::string image_id;
  ErrorKind kind;
  std::string message;
};

}  // namespace zsba
