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

#include "zsba/confusion.hpp"

#include <numeric>
#include <string>

#include "zsba/error.hpp"

namespace zsba {

ConfusionMatrix::ConfusionMatrix(std::size_t num_classes)
    : num_classes_(num_classes), counts_(num_classes * (num_classes + 1), 0) {}

void ConfusionMatrix::add(std::size_t truth, std::size_t predicted,
                          std::uint64_t n) {
  if (truth >= num_classes_ || predicted > num_classes_) {
    throw Error(ErrorKind::kValidation,
                "label pair (" + std::to_string(truth) + ", " +
                    std::to_string(predicted) + ") outside " +
                    std::to_string(num_classes_) + " classes");
  }
  counts_[truth * (num_classes_ + 1) + predicted] += n;
}

std::uint64_t ConfusionMatrix::count(std::size_t truth,
                                     std::size_t predicted) const {
  return counts_[truth * (num_classes_ + 1) + predicted];
}

ConfusionMatrix& ConfusionMatrix::operator+=(const ConfusionMatrix& other) {
  if (other.num_classes_ != num_classes_) {
    throw Error(ErrorKind::kShapeMismatch,
                "cannot merge confusion matrices of " +
                    std::to_string(num_classes_) + " and " +
                    std::to_string(other.num_classes_) + " classes");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  return *this;
}

ConfusionMatrix operator+(ConfusionMatrix a, const ConfusionMatrix& b) {
  a += b;
  return a;
}

std::uint64_t ConfusionMatrix::false_positives(std::size_t k) const {
  std::uint64_t sum = 0;
  for (std::size_t t = 0; t < num_classes_; ++t) {
    if (t != k) sum += count(t, k);
  }
  return sum;
}

std::uint64_t ConfusionMatrix::false_negatives(std::size_t k) const {
  return truth_total(k) - true_positives(k);
}

std::uint64_t ConfusionMatrix::truth_total(std::size_t k) const {
  const auto row = counts_.begin() + static_cast<std::ptrdiff_t>(k * (num_classes_ + 1));
  return std::accumulate(row, row + static_cast<std::ptrdiff_t>(num_classes_ + 1),
                         std::uint64_t{0});
}

std::uint64_t ConfusionMatrix::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

std::uint64_t ConfusionMatrix::correct() const {
  std::uint64_t sum = 0;
  for (std::size_t k = 0; k < num_classes_; ++k) sum += true_positives(k);
  return sum;
}

}  // namespace zsba
