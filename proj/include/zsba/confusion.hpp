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
#include <cstdint>
#include <vector>

namespace zsba {

// Counts indexed (truth, predicted). Column `num_classes()` holds samples or
// pixels that received no prediction ("unlabeled").
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(std::size_t num_classes = 0);

  std::size_t num_classes() const { return num_classes_; }
  std::size_t unlabeled_column() const { return num_classes_; }

  void add(std::size_t truth, std::size_t predicted, std::uint64_t n = 1);
  std::uint64_t count(std::size_t truth, std::size_t predicted) const;

  // Element-wise addition; throws kShapeMismatch on differing class counts.
  ConfusionMatrix& operator+=(const ConfusionMatrix& other);

  std::uint64_t true_positives(std::size_t k) const { return count(k, k); }
  // Predicted k, truth something else.
  std::uint64_t false_positives(std::size_t k) const;
  // Truth k, predicted something else (including unlabeled).
  std::uint64_t false_negatives(std::size_t k) const;
  std::uint64_t truth_total(std::size_t k) const;
  std::uint64_t total() const;
  std::uint64_t correct() const;

  const std::vector<std::uint64_t>& counts() const { return counts_; }

  bool operator==(const ConfusionMatrix&) const = default;

 private:
  std::size_t num_classes_;
  std::vector<std::uint64_t> counts_;
};

ConfusionMatrix operator+(ConfusionMatrix a, const ConfusionMatrix& b);

}  // namespace zsba
