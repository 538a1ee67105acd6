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

#include "zsba/classify.hpp"

#include <json.hpp>

#include "zsba/error.hpp"
#include "zsba/kernels.hpp"

namespace zsba {
namespace {

void require_classification(const TaskSpec& task) {
  if (route_task(task) != TaskKind::kClassification) {
    throw Error(ErrorKind::kPrecondition,
                "task \"" + task.task_id + "\" is a " + to_string(task.kind) +
                    " task, not classification");
  }
}

ClassificationResult make_result(const std::string& image_id, const TaskSpec& task,
                                 ScoreVector scores, std::size_t best) {
  return {image_id, task.task_id, best, task.categories[best].name, std::move(scores)};
}

}  // namespace

ClassificationResult classify_image(const std::string& image_id,
                                    std::span<const float> image_emb,
                                    const TaskSpec& task,
                                    const EmbeddingStore& store) {
  require_classification(task);
  const std::vector<Embedding> vocab = category_embeddings(task, store);
  ScoreVector scores = score_against(image_emb, vocab);
  const std::size_t best = argmax_index(scores);
  return make_result(image_id, task, std::move(scores), best);
}

BatchOutcome classify_batch(const DatasetManifest& manifest, const TaskSpec& task,
                            const EmbeddingStore& store, int workers) {
  require_classification(task);
  validate_manifest(manifest, task);
  const std::vector<Embedding> vocab = category_embeddings(task, store);

  std::vector<const Embedding*> queries;
  queries.reserve(manifest.samples.size());
  for (const ManifestSample& s : manifest.samples) {
    queries.push_back(store.find(image_key(s.image_id)));
  }
  std::vector<RowScore> rows = par::score_rows(queries, vocab, workers);

  BatchOutcome out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string& id = manifest.samples[i].image_id;
    if (queries[i] == nullptr) {
      out.failures.push_back({id, ErrorKind::kMissingKey,
                              "no image embedding for \"" + id + "\""});
    } else if (rows[i].error) {
      out.failures.push_back({id, rows[i].error->kind(), rows[i].error->message()});
    } else {
      out.results.push_back(make_result(id, task, std::move(rows[i].scores), rows[i].best));
    }
  }
  return out;
}

std::string to_json_line(const ClassificationResult& result) {
  nlohmann::ordered_json j;
  j["image_id"] = result.image_id;
  j["task_id"] = result.task_id;
  j["predicted_index"] = result.predicted_index;
  j["predicted_name"] = result.predicted_name;
  j["scores"] = result.scores;
  return j.dump();
}

}  // namespace zsba
