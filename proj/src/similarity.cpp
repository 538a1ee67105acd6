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

#include "zsba/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zsba/error.hpp"

namespace zsba {
namespace {

double checked_norm(std::span<const float> e) {
  if (e.empty()) {
    throw Error(ErrorKind::kDimensionMismatch, "embedding has length 0");
  }
  double sum = 0.0;
  for (float v : e) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::kNonFinite, "embedding contains NaN or Inf");
    }
    sum += static_cast<double>(v) * static_cast<double>(v);
  }
  if (sum == 0.0) {
    throw Error(ErrorKind::kZeroVector, "cosine is undefined for a zero vector");
  }
  return std::sqrt(sum);
}

}  // namespace

Embedding l2_normalize(std::span<const float> e) {
  const double norm = checked_norm(e);
  Embedding out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    out[i] = static_cast<float>(static_cast<double>(e[i]) / norm);
  }
  return out;
}

double cosine_sim(std::span<const float> a, std::span<const float> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "lengths " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
  }
  const double norm_a = checked_norm(a);
  const double norm_b = checked_norm(b);
  double dot = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += static_cast<double>(a[i]) * static_cast<double>(b[i]);
  }
  return std::clamp(dot / (norm_a * norm_b), -1.0, 1.0);
}

ScoreVector score_against(std::span<const float> e,
                          std::span<const Embedding> vocab) {
  if (vocab.empty()) {
    throw Error(ErrorKind::kEmptyVocabulary, "no category embeddings to score");
  }
  ScoreVector scores;
  scores.reserve(vocab.size());
  for (const Embedding& v : vocab) scores.push_back(cosine_sim(e, v));
  return scores;
}

std::size_t argmax_index(std::span<const double> scores) {
  if (scores.empty()) {
    throw Error(ErrorKind::kEmptyScores, "argmax of an empty score vector");
  }
  std::size_t best = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores[i])) {
      throw Error(ErrorKind::kNonFinite, "score " + std::to_string(i));
    }
    if (scores[i] > scores[best]) best = i;
  }
  return best;
}

}  // namespace zsba
