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


// Times each OpenMP kernel against its serial reference on synthetic inputs
// and checks the two agree. Usage: zsba_bench [repeats] [workers]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <vector>

#include "zsba/kernels.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double best_ms(int repeats, const std::function<void()>& fn) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = Clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
  }
  return best;
}

void report(const char* name, double ref_ms, double par_ms, bool same) {
  std::printf("%-22s ref %9.3f ms  par %9.3f ms  speedup %5.2fx  %s\n", name, ref_ms, par_ms,
              ref_ms / par_ms, same ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 5;
  const int workers = argc > 2 ? std::atoi(argv[2]) : 0;
  std::mt19937_64 rng(42);
  std::normal_distribution<float> gauss;
  bool all_same = true;

  // Scoring: 4096 queries of dim 512 against 16 categories.
  std::vector<zsba::Embedding> queries(4096, zsba::Embedding(512));
  std::vector<zsba::Embedding> vocab(16, zsba::Embedding(512));
  for (auto& v : queries) for (float& x : v) x = gauss(rng);
  for (auto& v : vocab) for (float& x : v) x = gauss(rng);
  std::vector<const zsba::Embedding*> ptrs;
  for (const auto& q : queries) ptrs.push_back(&q);

  std::vector<zsba::RowScore> a, b;
  const double s_ref = best_ms(repeats, [&] { a = zsba::ref::score_rows(ptrs, vocab); });
  const double s_par = best_ms(repeats, [&] { b = zsba::par::score_rows(ptrs, vocab, workers); });
  bool same = a.size() == b.size();
  for (std::size_t i = 0; same && i < a.size(); ++i) {
    same = a[i].scores == b[i].scores && a[i].best == b[i].best;
  }
  report("score_rows", s_ref, s_par, same);
  all_same &= same;

  // Painting: 1024x1024 image split into 64 horizontal band masks.
  constexpr std::size_t kSide = 1024, kBands = 64;
  zsba::MaskSet masks{kSide, kSide, {}};
  std::vector<std::size_t> labels;
  for (std::size_t j = 0; j < kBands; ++j) {
    zsba::BinaryMask m{"m" + std::to_string(j), kSide, kSide,
                       std::vector<std::uint8_t>(kSide * kSide, 0)};
    const std::size_t rows = kSide / kBands;
    std::fill_n(m.pixels.begin() + static_cast<std::ptrdiff_t>(j * rows * kSide), rows * kSide, 1);
    masks.masks.push_back(std::move(m));
    labels.push_back(j % 7);
  }
  zsba::SegmentationMap pa(1, 1, 0), pb(1, 1, 0);
  const double p_ref = best_ms(repeats, [&] { pa = zsba::ref::paint_labels(masks, labels); });
  const double p_par =
      best_ms(repeats, [&] { pb = zsba::par::paint_labels(masks, labels, workers); });
  report("paint_labels", p_ref, p_par, pa == pb);
  all_same &= pa == pb;

  // Confusion: 4M pixels over 8 classes with some unlabeled predictions.
  std::vector<std::uint8_t> truth(1u << 22), pred(1u << 22);
  for (std::size_t i = 0; i < truth.size(); ++i) {
    truth[i] = static_cast<std::uint8_t>(rng() % 8);
    pred[i] = rng() % 10 == 0 ? zsba::kUnlabeled : static_cast<std::uint8_t>(rng() % 8);
  }
  zsba::ConfusionMatrix ca(8), cb(8);
  const double c_ref = best_ms(repeats, [&] {
    ca = zsba::ConfusionMatrix(8);
    zsba::ref::accumulate_confusion(truth, pred, zsba::UnlabeledPolicy::kCountAsMiss, ca);
  });
  const double c_par = best_ms(repeats, [&] {
    cb = zsba::ConfusionMatrix(8);
    zsba::par::accumulate_confusion(truth, pred, zsba::UnlabeledPolicy::kCountAsMiss, cb,
                                    workers);
  });
  report("accumulate_confusion", c_ref, c_par, ca == cb);
  all_same &= ca == cb;

  return all_same ? 0 : 1;
}
