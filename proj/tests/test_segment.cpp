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


#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "zsba/error.hpp"
#include "zsba/segment.hpp"

namespace zsba {
namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::kIo;
}

BinaryMask mask2x2(std::vector<std::uint8_t> bits, std::string id = "m") {
  return {std::move(id), 2, 2, std::move(bits)};
}

RasterImage gray2x2(std::uint8_t a, std::uint8_t b, std::uint8_t c, std::uint8_t d) {
  RasterImage img(2, 2);
  const std::uint8_t v[4] = {a, b, c, d};
  for (std::size_t p = 0; p < 4; ++p) {
    for (std::size_t ch = 0; ch < 3; ++ch) img.pixels[3 * p + ch] = v[p];
  }
  return img;
}

TEST_CASE("apply_mask") {
  const RasterImage img = gray2x2(10, 20, 30, 40);
  CHECK(apply_mask(img, mask2x2({1, 1, 1, 1})) == img);
  CHECK(apply_mask(img, mask2x2({0, 0, 0, 0})) == RasterImage(2, 2, 0));
  CHECK(apply_mask(img, mask2x2({1, 0, 0, 1})) == gray2x2(10, 0, 0, 40));
  CHECK(kind_of([&] { apply_mask(img, BinaryMask{"m", 1, 4, {1, 1, 1, 1}}); }) ==
        ErrorKind::kDimensionMismatch);
}

TEST_CASE("apply_mask is idempotent") {
  testing::Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t w = 1 + rng() % 8, h = 1 + rng() % 8;
    RasterImage img(w, h);
    for (auto& v : img.pixels) v = static_cast<std::uint8_t>(rng());
    const BinaryMask m{"m", w, h, testing::random_bits(rng, std::size_t{w} * h)};
    const RasterImage once = apply_mask(img, m);
    CHECK(apply_mask(once, m) == once);
  }
}

struct FacadeSetup {
  TaskSpec task = make_task("facade", TaskKind::kSegmentation, "{}", {"roof", "door"});
  EmbeddingStore store{2};
  MaskSet masks{2, 2, {mask2x2({1, 1, 0, 0}, "a"), mask2x2({0, 0, 1, 1}, "b")}};

  FacadeSetup() {
    store.insert(text_key("roof"), {1, 0});
    store.insert(text_key("door"), {0, 1});
    store.insert(image_key("img", "a"), {1, 0});
    store.insert(image_key("img", "b"), {0, 1});
  }
};

TEST_CASE("score_masks diagonal similarity") {
  FacadeSetup s;
  const MaskScores scores = score_masks("img", s.masks, s.task, s.store);
  CHECK(scores.labels == std::vector<std::size_t>{0, 1});
  CHECK(scores.rows == std::vector<ScoreVector>{{1.0, 0.0}, {0.0, 1.0}});
  const SegmentationMap map = segment_image("img", s.masks, s.task, s.store);
  CHECK(map.labels == std::vector<std::uint8_t>{0, 0, 1, 1});
  CHECK(map == testing::oracle_compose(s.masks, scores.rows));
}

TEST_CASE("self-match on one mask") {
  const TaskSpec task = make_task("f", TaskKind::kSegmentation, "{}", {"roof", "window", "door"});
  EmbeddingStore store(3);
  store.insert(text_key("roof"), {1, 0, 0});
  store.insert(text_key("window"), {0.2f, 1, 0.1f});
  store.insert(text_key("door"), {0, 0, 1});
  store.insert(image_key("i", "w"), {0.2f, 1, 0.1f});
  const MaskSet masks{1, 1, {{"w", 1, 1, {1}}}};
  const MaskScores scores = score_masks("i", masks, task, store);
  CHECK(scores.labels[0] == 1);
  CHECK(scores.rows[0][1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("score_masks errors") {
  FacadeSetup s;
  s.store.erase(image_key("img", "b"));
  try {
    score_masks("img", s.masks, s.task, s.store);
    FAIL("expected MissingKey");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kMissingKey);
    const std::string what = e.what();
    CHECK(what.find("img") != std::string::npos);
    CHECK(what.find("\"b\"") != std::string::npos);
  }
  TaskSpec cls = s.task;
  cls.kind = TaskKind::kClassification;
  CHECK(kind_of([&] { score_masks("img", s.masks, cls, s.store); }) == ErrorKind::kPrecondition);
}

TEST_CASE("compose_segmentation") {
  const MaskSet full{2, 2, {mask2x2({1, 1, 1, 1})}};
  CHECK(compose_segmentation(full, MaskScores{{{0.1, 0.9}}, {}}).labels ==
        std::vector<std::uint8_t>{1, 1, 1, 1});

  const MaskSet gap{2, 2, {mask2x2({0, 1, 1, 1})}};
  CHECK(compose_segmentation(gap, MaskScores{{{0.1, 0.9}}, {}}).at(0, 0) == kUnlabeled);

  // Mask A covers row 0 with R_A = [0.3, 0.8]; mask B covers row 1 with
  // R_B = [0.9, 0.2].
  const MaskSet rows{2, 2, {mask2x2({1, 1, 0, 0}, "A"), mask2x2({0, 0, 1, 1}, "B")}};
  const std::vector<ScoreVector> r{{0.3, 0.8}, {0.9, 0.2}};
  const SegmentationMap map = compose_segmentation(rows, MaskScores{r, {}});
  CHECK(map.labels == std::vector<std::uint8_t>{1, 1, 0, 0});
  CHECK(map == testing::oracle_compose(rows, r));

  CHECK(kind_of([&] { compose_segmentation(rows, MaskScores{{{0.3, 0.8}}, {}}); }) ==
        ErrorKind::kRowCountMismatch);
  const MaskSet overlap{2, 2, {mask2x2({1, 1, 0, 0}, "A"), mask2x2({0, 1, 1, 0}, "B")}};
  CHECK(kind_of([&] { compose_segmentation(overlap, MaskScores{r, {}}); }) ==
        ErrorKind::kOverlappingMasks);
}

TEST_CASE("segment_image edge cases") {
  FacadeSetup s;
  const MaskSet none{3, 2, {}};
  CHECK(segment_image("img", none, s.task, s.store) == SegmentationMap(3, 2, kUnlabeled));
  const MaskSet overlap{2, 2, {mask2x2({1, 1, 0, 0}, "a"), mask2x2({0, 1, 1, 0}, "b")}};
  CHECK(kind_of([&] { segment_image("img", overlap, s.task, s.store); }) ==
        ErrorKind::kOverlappingMasks);
}

TEST_CASE("composition properties on random instances") {
  testing::Rng rng(101);
  std::uniform_real_distribution<double> score(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const MaskSet masks = testing::random_mask_set(rng, 1 + rng() % 8, 1 + rng() % 8, 4);
    const std::size_t classes = 1 + rng() % 4;
    std::vector<ScoreVector> rows(masks.masks.size(), ScoreVector(classes));
    for (auto& row : rows) {
      for (auto& v : row) v = score(rng);
    }
    const SegmentationMap map = compose_segmentation(masks, MaskScores{rows, {}}, 1 + trial % 3);
    CHECK(map == testing::oracle_compose(masks, rows));

    std::size_t covered = 0;
    for (const auto& m : masks.masks) covered += m.area();
    CHECK(static_cast<std::size_t>(std::count(map.labels.begin(), map.labels.end(), kUnlabeled)) ==
          masks.pixel_count() - covered);

    if (masks.masks.size() >= 2) {
      // Perturbing mask 1's scores leaves mask 0's pixels unchanged.
      auto perturbed = rows;
      for (auto& v : perturbed[1]) v = score(rng);
      const SegmentationMap other = compose_segmentation(masks, MaskScores{perturbed, {}});
      for (std::size_t p = 0; p < masks.pixel_count(); ++p) {
        if (masks.masks[0].pixels[p] != 0) CHECK(other.labels[p] == map.labels[p]);
      }
    }

    // Relabeling categories permutes the output labels the same way.
    std::vector<std::size_t> perm(classes);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto permuted = rows;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      for (std::size_t k = 0; k < classes; ++k) permuted[j][k] = rows[j][perm[k]];
    }
    const SegmentationMap relabeled = compose_segmentation(masks, MaskScores{permuted, {}});
    for (std::size_t p = 0; p < masks.pixel_count(); ++p) {
      if (map.labels[p] == kUnlabeled) {
        CHECK(relabeled.labels[p] == kUnlabeled);
      } else {
        CHECK(perm[relabeled.labels[p]] == map.labels[p]);
      }
    }
  }
}

}  // namespace
}  // namespace zsba
