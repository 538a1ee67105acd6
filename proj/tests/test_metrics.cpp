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
#include <cmath>
#include <random>

#include "support/generators.hpp"
#include "zsba/error.hpp"
#include "zsba/metrics.hpp"

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

const TaskSpec kAB = make_task("t", TaskKind::kClassification, "{}", {"A", "B"});

ClassificationResult predict(const std::string& id, std::size_t k) {
  return {id, "t", k, k == 0 ? "A" : "B", {}};
}

TEST_CASE("all correct") {
  const DatasetManifest m{"t", {{"1", 0, {}}, {"2", 1, {}}}};
  const std::vector<ClassificationResult> r{predict("1", 0), predict("2", 1)};
  const EvalReport rep = classification_report(r, m, kAB);
  CHECK(rep.per_class[0].value == 100.0);
  CHECK(rep.per_class[1].value == 100.0);
  CHECK(rep.micro_average == 100.0);
  CHECK(rep.macro_average == 100.0);
  CHECK_FALSE(rep.mean_iou);
}

TEST_CASE("hand-counted 75 / 50 case") {
  // A: 3 samples all right; B: 1 sample wrong.
  const DatasetManifest m{"t", {{"a1", 0, {}}, {"a2", 0, {}}, {"a3", 0, {}}, {"b1", 1, {}}}};
  const std::vector<ClassificationResult> r{predict("a1", 0), predict("a2", 0),
                                            predict("a3", 0), predict("b1", 0)};
  const EvalReport rep = classification_report(r, m, kAB);
  CHECK(rep.per_class[0].count == 3);
  CHECK(rep.per_class[0].value == 100.0);
  CHECK(rep.per_class[1].value == 0.0);
  CHECK(rep.micro_average == 75.0);
  CHECK(rep.macro_average == 50.0);

  const std::string table = report_to_table(rep);
  CHECK(table ==
        "Accuracy (%)  | # Images |  Ours\n"
        "--------------------------------\n"
        "A             |        3 | 100.0\n"
        "B             |        1 |   0.0\n"
        "--------------------------------\n"
        "Micro-Average |          |  75.0\n"
        "Macro-Average |          |  50.0\n");
}

TEST_CASE("reported floor-count rows re-derive within rounding") {
  // Per-class accuracies 80.8 / 57.8 / 0.0 on 2393 / 580 / 16 images.
  const std::uint64_t counts[3] = {2393, 580, 16};
  const double acc[3] = {80.8, 57.8, 0.0};
  double weighted = 0, plain = 0;
  for (int k = 0; k < 3; ++k) {
    weighted += acc[k] * static_cast<double>(counts[k]);
    plain += acc[k];
  }
  CHECK(std::abs(weighted / 2989.0 - 75.9) <= 0.15);
  CHECK(std::abs(plain / 3.0 - 46.2) <= 0.15);
}

TEST_CASE("zero-sample classes are absent and excluded from macro") {
  const TaskSpec abc = make_task("t", TaskKind::kClassification, "{}", {"A", "B", "C"});
  const DatasetManifest m{"t", {{"1", 0, {}}, {"2", 1, {}}, {"3", {}, {}}}};
  const std::vector<ClassificationResult> r{predict("1", 0), predict("2", 0), predict("3", 2)};
  const EvalReport rep = classification_report(r, m, abc);
  CHECK_FALSE(rep.per_class[2].value);
  CHECK(rep.macro_average == 50.0);
  CHECK(rep.micro_average == 50.0);
  CHECK(report_to_table(rep).find("C             |        0 |     -") != std::string::npos);
}

TEST_CASE("classification report errors") {
  const DatasetManifest m{"t", {{"1", 0, {}}}};
  CHECK(kind_of([&] {
    classification_report(std::vector<ClassificationResult>{predict("x", 0)}, m, kAB);
  }) == ErrorKind::kUnknownSample);
  CHECK(kind_of([&] { classification_report({}, m, kAB); }) == ErrorKind::kEmptyDataset);
}

TEST_CASE("segmentation 2x2 hand confusion matrix") {
  const TaskSpec two = make_task("s", TaskKind::kSegmentation, "{}", {"wall", "sky"});
  SegmentationMap gt(2, 2, 0), pred(2, 2, 0);
  pred.labels = {0, 0, 1, 1};
  const EvalReport rep = segmentation_report(std::vector{pred}, std::vector{gt}, two);
  CHECK(rep.per_class[0].value == 50.0);  // 2 / (2 + 0 + 2)
  CHECK(rep.per_class[1].value == 0.0);   // 0 / (0 + 2 + 0)
  CHECK(rep.mean_iou == 25.0);
  CHECK(rep.micro_average == 50.0);

  const EvalReport same = segmentation_report(std::vector{gt}, std::vector{gt}, two);
  CHECK(same.per_class[0].value == 100.0);
  CHECK_FALSE(same.per_class[1].value);
  CHECK(same.mean_iou == 100.0);
  CHECK(report_to_table(same).find("Mean") != std::string::npos);
}

TEST_CASE("segmentation sentinel handling") {
  const TaskSpec two = make_task("s", TaskKind::kSegmentation, "{}", {"wall", "sky"});
  SegmentationMap gt(2, 2), pred(2, 2);
  gt.labels = {0, 0, 1, kUnlabeled};
  pred.labels = {0, kUnlabeled, 1, 0};
  // Default: the unlabeled prediction is a miss for "wall"; the ignored truth
  // pixel contributes nothing.
  const EvalReport miss = segmentation_report(std::vector{pred}, std::vector{gt}, two);
  CHECK(miss.per_class[0].value == 50.0);
  CHECK(miss.per_class[1].value == 100.0);
  CHECK(miss.mean_iou == 75.0);
  const EvalReport ignore =
      segmentation_report(std::vector{pred}, std::vector{gt}, two, UnlabeledPolicy::kIgnore);
  CHECK(ignore.per_class[0].value == 100.0);
  CHECK(ignore.mean_iou == 100.0);
}

TEST_CASE("segmentation report errors") {
  const TaskSpec two = make_task("s", TaskKind::kSegmentation, "{}", {"wall", "sky"});
  const SegmentationMap a(2, 2, 0), b(2, 3, 0);
  CHECK(kind_of([&] { segmentation_report(std::vector{a}, std::vector{b}, two); }) ==
        ErrorKind::kShapeMismatch);
  CHECK(kind_of([&] { segmentation_report(std::vector{a, a}, std::vector{a}, two); }) ==
        ErrorKind::kLengthMismatch);
  const SegmentationMap blank(2, 2, kUnlabeled);
  CHECK(kind_of([&] { segmentation_report(std::vector{a}, std::vector{blank}, two); }) ==
        ErrorKind::kEmptyDataset);
}

TEST_CASE("merge equals the report on the union, any order") {
  testing::Rng rng(77);
  const TaskSpec abc = make_task("t", TaskKind::kClassification, "{}", {"A", "B", "C"});
  DatasetManifest m{"t", {}};
  std::vector<ClassificationResult> results;
  for (int i = 0; i < 90; ++i) {
    const std::string id = std::to_string(i);
    m.samples.push_back({id, static_cast<std::size_t>(rng() % 3), {}});
    const std::size_t k = rng() % 3;
    results.push_back({id, "t", k, abc.categories[k].name, {}});
  }
  const EvalReport whole = classification_report(results, m, abc);
  const std::span<const ClassificationResult> all(results);
  const EvalReport a = classification_report(all.subspan(0, 30), m, abc);
  const EvalReport b = classification_report(all.subspan(30, 25), m, abc);
  const EvalReport c = classification_report(all.subspan(55), m, abc);
  CHECK(merge_reports(merge_reports(a, b), c) == whole);
  CHECK(merge_reports(a, merge_reports(b, c)) == whole);
  CHECK(merge_reports(c, merge_reports(a, b)) == whole);

  std::shuffle(results.begin(), results.end(), rng);
  CHECK(classification_report(results, m, abc) == whole);

  const TaskSpec seg = make_task("s", TaskKind::kSegmentation, "{}", {"x"});
  const SegmentationMap one(1, 1, 0);
  CHECK(kind_of([&] {
    merge_reports(whole, segmentation_report(std::vector{one}, std::vector{one}, seg));
  }) == ErrorKind::kShapeMismatch);
}

TEST_CASE("JSON round trip") {
  const DatasetManifest m{"t", {{"a1", 0, {}}, {"a2", 0, {}}, {"b1", 1, {}}}};
  const std::vector<ClassificationResult> r{predict("a1", 0), predict("a2", 1), predict("b1", 1)};
  const EvalReport rep = classification_report(r, m, kAB);
  CHECK(report_from_json(report_to_json(rep)) == rep);

  const TaskSpec two = make_task("s", TaskKind::kSegmentation, "{}", {"wall", "sky"});
  SegmentationMap gt(3, 1, 0), pred(3, 1, 0);
  pred.labels = {1, kUnlabeled, 0};
  const EvalReport seg = segmentation_report(std::vector{pred}, std::vector{gt}, two);
  CHECK(report_from_json(report_to_json(seg)) == seg);

  CHECK(kind_of([] { report_from_json("{}"); }) == ErrorKind::kParse);
  CHECK(kind_of([] { report_from_json("nope"); }) == ErrorKind::kParse);
}

}  // namespace
}  // namespace zsba
