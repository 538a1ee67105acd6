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

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "zsba/embedding_store.hpp"
#include "zsba/mask_set.hpp"
#include "zsba/pipeline.hpp"
#include "zsba/raster.hpp"
#include "zsba/vocabulary.hpp"

namespace zsba::testing {

// Fresh, empty directory under the system temp dir.
std::filesystem::path scratch_dir(const std::string& name);

// A complete on-disk input set with analytically known answers:
//   - roof_type preset (3 classes), 6 images, 2 per class; each image
//     embedding is dominated by the axis of its class's prompt embedding.
//   - facade preset (4 classes), 2 images of 6x4 pixels with 3 masks each;
//     every masked-image embedding is dominated by its label's axis. Ground
//     truth maps equal the expected predictions, unlabeled where no mask.
struct Fixture {
  std::filesystem::path root;
  std::filesystem::path tasks;
  std::filesystem::path embeddings;
  std::filesystem::path classify_manifest;
  std::filesystem::path segment_manifest;
  std::filesystem::path masks_dir;

  TaskSpec classify_task;
  TaskSpec segment_task;
  EmbeddingStore store{1};
  std::map<std::string, std::size_t> class_truth;
  std::map<std::string, MaskSet> mask_sets;
  std::map<std::string, SegmentationMap> expected_maps;

  // Every key that classify and segment read.
  std::vector<std::string> required_keys() const;

  RunConfig classify_config(const std::filesystem::path& out) const;
  RunConfig segment_config(const std::filesystem::path& out) const;
};

Fixture write_fixture(const std::filesystem::path& root);

}  // namespace zsba::testing
