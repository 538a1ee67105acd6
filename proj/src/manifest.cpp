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

#include "zsba/manifest.hpp"

#include <set>

#include <json.hpp>

#include "io_util.hpp"

namespace zsba {
namespace {

using nlohmann::json;

}  // namespace

const ManifestSample* DatasetManifest::find(std::string_view image_id) const {
  for (const ManifestSample& s : samples) {
    if (s.image_id == image_id) return &s;
  }
  return nullptr;
}

bool DatasetManifest::any_ground_truth() const {
  for (const ManifestSample& s : samples) {
    if (s.ground_truth || s.gt_map) return true;
  }
  return false;
}

void validate_manifest(const DatasetManifest& manifest, const TaskSpec& task) {
  if (manifest.task_id != task.task_id) {
    throw Error(ErrorKind::kManifest, "manifest is for task \"" + manifest.task_id +
                                          "\", not \"" + task.task_id + "\"");
  }
  std::set<std::string_view> ids;
  for (const ManifestSample& s : manifest.samples) {
    if (s.image_id.empty()) throw Error(ErrorKind::kManifest, "empty image_id");
    if (!ids.insert(s.image_id).second) {
      throw Error(ErrorKind::kManifest, "duplicate image_id \"" + s.image_id + "\"");
    }
    if (s.ground_truth && *s.ground_truth >= task.size()) {
      throw Error(ErrorKind::kManifest,
                  "\"" + s.image_id + "\": ground_truth " +
                      std::to_string(*s.ground_truth) + " is not below " +
                      std::to_string(task.size()));
    }
  }
}

DatasetManifest parse_manifest(std::string_view json_text, const TaskSpec& task,
                               const std::filesystem::path& base_dir,
                               std::string_view source) {
  const std::string where(source);
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse,
                where + ": " +
                    detail::describe_offset(json_text, e.byte == 0 ? 0 : e.byte - 1) +
                    ": malformed JSON");
  }
  auto fail = [&](const std::string& path, const std::string& what) {
    throw Error(ErrorKind::kManifest, where + ": " + path + ": " + what);
  };
  if (!doc.is_object()) fail("$", "expected an object");
  if (!doc.contains("task_id") || !doc["task_id"].is_string()) {
    fail("$", "missing string \"task_id\"");
  }
  if (!doc.contains("samples") || !doc["samples"].is_array()) {
    fail("$", "missing array \"samples\"");
  }

  DatasetManifest manifest;
  manifest.task_id = doc["task_id"].get<std::string>();
  const json& samples = doc["samples"];
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const std::string path = "$.samples[" + std::to_string(i) + "]";
    const json& entry = samples[i];
    if (!entry.is_object() || !entry.contains("image_id") ||
        !entry["image_id"].is_string()) {
      fail(path, "expected an object with string \"image_id\"");
    }
    ManifestSample sample;
    sample.image_id = entry["image_id"].get<std::string>();
    if (auto it = entry.find("ground_truth"); it != entry.end() && !it->is_null()) {
      if (it->is_number_unsigned()) {
        sample.ground_truth = it->get<std::size_t>();
      } else if (it->is_string()) {
        try {
          sample.ground_truth = task.index_of(it->get<std::string>());
        } catch (const Error& e) {
          fail(path + ".ground_truth", e.message());
        }
      } else {
        fail(path + ".ground_truth", "expected a category index or name");
      }
    }
    if (auto it = entry.find("gt_map"); it != entry.end() && !it->is_null()) {
      if (!it->is_string()) fail(path + ".gt_map", "expected a path string");
      std::filesystem::path p(it->get<std::string>());
      sample.gt_map = p.is_absolute() || base_dir.empty() ? p : base_dir / p;
    }
    manifest.samples.push_back(std::move(sample));
  }
  try {
    validate_manifest(manifest, task);
  } catch (const Error& e) {
    throw Error(e.kind(), where + ": " + e.message());
  }
  return manifest;
}

DatasetManifest load_manifest(const std::filesystem::path& path,
                              const TaskSpec& task) {
  return parse_manifest(detail::read_file(path), task, path.parent_path(),
                        path.string());
}

std::string serialize_manifest(const DatasetManifest& manifest) {
  json samples = json::array();
  for (const ManifestSample& s : manifest.samples) {
    json entry = {{"image_id", s.image_id}};
    if (s.ground_truth) entry["ground_truth"] = *s.ground_truth;
    if (s.gt_map) entry["gt_map"] = s.gt_map->generic_string();
    samples.push_back(std::move(entry));
  }
  return json{{"task_id", manifest.task_id}, {"samples", std::move(samples)}}.dump(2) +
         "\n";
}

}  // namespace zsba
