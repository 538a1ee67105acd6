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
#include <span>
#include <string>
#include <vector>

#include "zsba/embedding_store.hpp"
#include "zsba/manifest.hpp"
#include "zsba/similarity.hpp"
#include "zsba/vocabulary.hpp"

namespace zsba {

struct ClassificationResult {
  std::string image_id;
  std::string task_id;
  std::size_t predicted_index = 0;
  std::string predicted_name;
  ScoreVector scores;

  bool operator==(const ClassificationResult&) const = default;
};

// Scores the image embedding against the rendered prompt of every category
// and picks the best (lowest index on ties). Throws kPrecondition for a
// segmentation task and kMissingKey for an unexported prompt.
ClassificationResult classify_image(const std::string& image_id,
                                    std::span<const float> image_emb,
                                    const TaskSpec& task,
                                    const EmbeddingStore& store);

struct BatchOutcome {
  std::vector<ClassificationResult> results;
  std::vector<SampleFailure> failures;
};

// One result per manifest sample, in manifest order. Samples that fail (no
// embedding, zero vector, ...) are recorded in `failures` and skipped.
// Task-level problems (wrong kind, missing prompt, manifest/task mismatch)
// throw. `workers` bounds the scoring threads; output does not depend on it.
BatchOutcome classify_batch(const DatasetManifest& manifest, const TaskSpec& task,
                            const EmbeddingStore& store, int workers = 1);

// {"image_id","task_id","predicted_index","predicted_name","scores"}
std::string to_json_line(const ClassificationResult& result);

}  // namespace zsba
