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

#include <random>

#include "support/generators.hpp"
#include "zsba/error.hpp"
#include "zsba/kernels.hpp"

namespace zsba {
namespace {

TEST_CASE("score_rows: parallel matches serial") {
  testing::Rng rng(1);
  std::vector<Embedding> vocab;
  for (int k = 0; k < 7; ++k) vocab.push_back(testing::random_embedding(rng, 32));
  std::vector<Embedding> storage;
  for (int i = 0; i < 300; ++i) storage.push_back(testing::random_embedding(rng, 32));
  storage[10].assign(32, 0.0f);
  std::vector<const Embedding*> queries;
  for (const auto& e : storage) queries.push_back(&e);
  queries[20] = nullptr;

  const auto serial = ref::score_rows(queries, vocab);
  for (int workers : {1, 2, 4, 0}) {
    const auto parallel = par::score_rows(queries, vocab, workers);
    REQUIRE(parallel.size() == serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(parallel[i].scores == serial[i].scores);
      CHECK(parallel[i].best == serial[i].best);
      CHECK(parallel[i].error.has_value() == serial[i].error.has_value());
    }
  }
  REQUIRE(serial[10].error);
  CHECK(serial[10].error->kind() == ErrorKind::kZeroVector);
  REQUIRE(serial[20].error);
  CHECK(serial[20].error->kind() == ErrorKind::kPrecondition);
}

TEST_CASE("paint_labels: parallel matches serial") {
  testing::Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const MaskSet masks = testing::random_mask_set(rng, 1 + rng() % 40, 1 + rng() % 40, 6);
    std::vector<std::size_t> labels;
    for (std::size_t j = 0; j < masks.masks.size(); ++j) labels.push_back(rng() % 255);
    CHECK(par::paint_labels(masks, labels, 1 + trial % 4) == ref::paint_labels(masks, labels));
  }
  const MaskSet one{1, 1, {{"m", 1, 1, {1}}}};
  CHECK_THROWS_AS(par::paint_labels(one, std::vector<std::size_t>{}, 2), Error);
  CHECK_THROWS_AS(ref::paint_labels(one, std::vector<std::size_t>{255}), Error);
}

TEST_CASE("accumulate_confusion: parallel matches serial") {
  testing::Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t classes = 1 + rng() % 6;
    const std::size_t n = rng() % 5000;
    std::vector<std::uint8_t> truth(n), pred(n);
    for (std::size_t i = 0; i < n; ++i) {
      truth[i] = rng() % 8 == 0 ? kUnlabeled : static_cast<std::uint8_t>(rng() % classes);
      pred[i] = rng() % 8 == 0 ? kUnlabeled : static_cast<std::uint8_t>(rng() % classes);
    }
    for (auto policy : {UnlabeledPolicy::kCountAsMiss, UnlabeledPolicy::kIgnore}) {
      ConfusionMatrix serial(classes), parallel(classes);
      ref::accumulate_confusion(truth, pred, policy, serial);
      par::accumulate_confusion(truth, pred, policy, parallel, 1 + trial % 4);
      CHECK(parallel == serial);
    }
  }
}

TEST_CASE("accumulate_confusion rules") {
  const std::vector<std::uint8_t> truth{0, 0, 1, kUnlabeled, 1};
  const std::vector<std::uint8_t> pred{0, kUnlabeled, 0, 1, 1};
  ConfusionMatrix miss(2), ignore(2);
  par::accumulate_confusion(truth, pred, UnlabeledPolicy::kCountAsMiss, miss, 2);
  par::accumulate_confusion(truth, pred, UnlabeledPolicy::kIgnore, ignore, 2);
  CHECK(miss.count(0, 0) == 1);
  CHECK(miss.count(0, miss.unlabeled_column()) == 1);
  CHECK(miss.count(1, 0) == 1);
  CHECK(miss.count(1, 1) == 1);
  CHECK(miss.total() == 4);
  CHECK(ignore.total() == 3);
  CHECK(ignore.count(0, ignore.unlabeled_column()) == 0);

  ConfusionMatrix untouched(2);
  const std::vector<std::uint8_t> bad{0, 7};
  CHECK_THROWS_AS(par::accumulate_confusion(bad, bad, UnlabeledPolicy::kIgnore, untouched, 2),
                  Error);
  CHECK_THROWS_AS(ref::accumulate_confusion(bad, bad, UnlabeledPolicy::kIgnore, untouched),
                  Error);
  CHECK(untouched.total() == 0);
  CHECK_THROWS_AS(ref::accumulate_confusion(bad, truth, UnlabeledPolicy::kIgnore, untouched),
                  Error);
}

}  // namespace
}  // namespace zsba
