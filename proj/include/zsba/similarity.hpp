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
#include <vector>

namespace zsba {

// A point in the joint image/text space. Stored as 32-bit floats to match the
// on-disk format; every computation below accumulates in double.
using Embedding = std::vector<float>;

// One cosine score per category, in category order.
using ScoreVector = std::vector<double>;

// Returns e / ||e||. Throws kZeroVector for an all-zero input and kNonFinite
// for NaN/Inf components.
Embedding l2_normalize(std::span<const float> e);

// a.b / (||a|| ||b||), clamped to [-1, 1]. Accumulation is strictly
// left-to-right so identical inputs give bit-identical outputs.
double cosine_sim(std::span<const float> a, std::span<const float> b);

// scores[i] = cosine_sim(e, vocab[i]).
ScoreVector score_against(std::span<const float> e,
                          std::span<const Embedding> vocab);

// Index of the maximum score; ties resolve to the lowest index.
std::size_t argmax_index(std::span<const double> scores);

}  // namespace zsba
