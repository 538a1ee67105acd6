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

// Label value for pixels that no mask covers.
inline constexpr std::uint8_t kUnlabeled = 255;

// H x W x 3, row-major, channels interleaved.
struct RasterImage {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::uint8_t> pixels;

  RasterImage() = default;
  RasterImage(std::uint32_t w, std::uint32_t h, std::uint8_t fill = 0)
      : width(w), height(h), pixels(static_cast<std::size_t>(w) * h * 3, fill) {}

  std::uint8_t& at(std::size_t row, std::size_t col, std::size_t channel) {
    return pixels[(row * width + col) * 3 + channel];
  }
  std::uint8_t at(std::size_t row, std::size_t col, std::size_t channel) const {
    return pixels[(row * width + col) * 3 + channel];
  }

  bool operator==(const RasterImage&) const = default;
};

// Per-pixel category index, or kUnlabeled.
struct SegmentationMap {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::uint8_t> labels;

  SegmentationMap() = default;
  SegmentationMap(std::uint32_t w, std::uint32_t h, std::uint8_t fill = kUnlabeled)
      : width(w), height(h), labels(static_cast<std::size_t>(w) * h, fill) {}

  std::uint8_t at(std::size_t row, std::size_t col) const {
    return labels[row * width + col];
  }

  bool operator==(const SegmentationMap&) const = default;
};

}  // namespace zsba
