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


#include "support/fixtures.hpp"

#include <fstream>
#include <unistd.h>

#include "zsba/manifest.hpp"
#include "zsba/netpbm.hpp"

namespace zsba::testing {
namespace {

namespace fs = std::filesystem;

constexpr std::uint32_t kDim = 8;
constexpr std::size_t kNoiseAxis = 7;

Embedding axis_mix(std::size_t main, std::size_t second, float second_weight) {
  Embedding e(kDim, 0.0f);
  e[main] = 1.0f;
  e[second] += second_weight;
  e[kNoiseAxis] += 0.2f;
  return e;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

BinaryMask rect(const std::string& id, std::uint32_t width, std::uint32_t height,
                std::uint32_t row0, std::uint32_t row1, std::uint32_t col0,
                std::uint32_t col1) {
  BinaryMask m{id, width, height,
               std::vector<std::uint8_t>(static_cast<std::size_t>(width) * height, 0)};
  for (std::uint32_t r = row0; r < row1; ++r) {
    for (std::uint32_t c = col0; c < col1; ++c) m.pixels[r * width + c] = 1;
  }
  return m;
}

}  // namespace

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "zsba_tests" /
                       (name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::vector<std::string> Fixture::required_keys() const {
  std::vector<std::string> keys;
  for (const TaskSpec* task : {&classify_task, &segment_task}) {
    for (const CategorySpec& c : task->categories) {
      keys.push_back(text_key(render_prompt(*task, c)));
    }
  }
  for (const auto& [id, truth] : class_truth) keys.push_back(image_key(id));
  for (const auto& [id, masks] : mask_sets) {
    for (const BinaryMask& m : masks.masks) keys.push_back(image_key(id, m.id));
  }
  return keys;
}

RunConfig Fixture::classify_config(const fs::path& out) const {
  RunConfig c;
  c.tasks = tasks.string();
  c.task_id = classify_task.task_id;
  c.embeddings = embeddings;
  c.manifest = classify_manifest;
  c.out = out;
  return c;
}

RunConfig Fixture::segment_config(const fs::path& out) const {
  RunConfig c;
  c.tasks = tasks.string();
  c.task_id = segment_task.task_id;
  c.embeddings = embeddings;
  c.manifest = segment_manifest;
  c.masks_dir = masks_dir;
  c.out = out;
  return c;
}

Fixture write_fixture(const fs::path& root) {
  Fixture f;
  f.root = root;
  fs::create_directories(root);
  f.tasks = root / "tasks.json";
  f.embeddings = root / "embeddings.zsba";
  f.classify_manifest = root / "classify_manifest.json";
  f.segment_manifest = root / "segment_manifest.json";
  f.masks_dir = root / "masks";
  fs::create_directories(f.masks_dir);
  fs::create_directories(root / "gt");

  f.classify_task = load_tasks(resolve_task_file("roof_type")).front();
  f.segment_task = load_tasks(resolve_task_file("facade")).front();
  const std::vector<TaskSpec> both{f.classify_task, f.segment_task};
  write_text(f.tasks, serialize_tasks(both));

  // Classification categories live on axes 0..2, segmentation ones on 3..6.
  f.store = EmbeddingStore(kDim);
  for (const CategorySpec& c : f.classify_task.categories) {
    f.store.insert(text_key(render_prompt(f.classify_task, c)),
                   axis_mix(c.index, kNoiseAxis, 0.0f));
  }
  for (const CategorySpec& c : f.segment_task.categories) {
    f.store.insert(text_key(render_prompt(f.segment_task, c)),
                   axis_mix(3 + c.index, kNoiseAxis, 0.0f));
  }

  DatasetManifest cls{f.classify_task.task_id, {}};
  for (std::size_t i = 0; i < 6; ++i) {
    const std::size_t label = i % 3;
    const std::string id = "house_" + std::to_string(i);
    f.store.insert(image_key(id), axis_mix(label, (label + 1) % 3, 0.3f));
    f.class_truth[id] = label;
    cls.samples.push_back({id, label, std::nullopt});
  }
  write_text(f.classify_manifest, serialize_manifest(cls));

  // Facade labels: 0 roof, 1 facade, 2 window, 3 door.
  constexpr std::uint32_t W = 6, H = 4;
  struct Region {
    BinaryMask mask;
    std::size_t label;
  };
  const std::vector<std::pair<std::string, std::vector<Region>>> images = {
      {"facade_a",
       {{rect("m0", W, H, 0, 1, 0, 6), 0},
        {rect("m1", W, H, 1, 3, 0, 4), 1},
        {rect("m2", W, H, 3, 4, 2, 4), 3}}},
      {"facade_b",
       {{rect("m0", W, H, 0, 1, 0, 6), 2},
        {rect("m1", W, H, 1, 4, 0, 3), 1},
        {rect("m2", W, H, 1, 4, 4, 6), 0}}},
  };
  DatasetManifest seg{f.segment_task.task_id, {}};
  for (const auto& [id, regions] : images) {
    MaskSet set{W, H, {}};
    SegmentationMap truth(W, H);
    for (const Region& r : regions) {
      set.masks.push_back(r.mask);
      f.store.insert(image_key(id, r.mask.id),
                     axis_mix(3 + r.label, 3 + (r.label + 1) % 4, 0.1f));
      for (std::size_t p = 0; p < r.mask.pixels.size(); ++p) {
        if (r.mask.pixels[p] != 0) truth.labels[p] = static_cast<std::uint8_t>(r.label);
      }
    }
    write_text(f.masks_dir / (id + ".json"), serialize_masks(set));
    write_pgm(truth, root / "gt" / (id + ".pgm"));
    seg.samples.push_back({id, std::nullopt, fs::path("gt") / (id + ".pgm")});
    f.mask_sets[id] = set;
    f.expected_maps[id] = truth;
  }
  write_text(f.segment_manifest, serialize_manifest(seg));

  write_embeddings(f.store, f.embeddings);
  return f;
}

}  // namespace zsba::testing
