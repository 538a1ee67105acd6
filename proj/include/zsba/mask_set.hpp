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
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zsba {

// Row-major H x W grid of 0/1 values.
struct BinaryMask {
  std::string id;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::uint8_t> pixels;

  std::size_t area() const;
  bool at(std::size_t row, std::size_t col) const {
    return pixels[row * width + col] != 0;
  }

  bool operator==(const BinaryMask&) const = default;
};

// Category-agnostic masks for one image. Loaded sets are pairwise
// non-overlapping and every mask covers at least one pixel.
struct MaskSet {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<BinaryMask> masks;

  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width) * height;
  }

  bool operator==(const MaskSet&) const = default;
};

enum class OverlapPolicy {
  kStrict,   // reject overlapping masks
  kLenient,  // contested pixels go to the larger mask, with a warning
};

// Canonical run-length encoding: alternating zero/one runs starting with a
// (possibly empty) zero run, no other empty runs, sum = pixel count.
std::vector<std::uint64_t> rle_encode(std::span<const std::uint8_t> pixels);

// Throws kRleLengthMismatch if the counts do not sum to `pixel_count`, and
// kParse for a non-canonical run list.
std::vector<std::uint8_t> rle_decode(std::span<const std::uint64_t> counts,
                                     std::size_t pixel_count);

// Throws kOverlappingMasks naming the first contested pixel, kShapeMismatch
// for a mask whose size disagrees with the set.
void check_masks(const MaskSet& masks);

// Reassigns every contested pixel to the covering mask with the larger area
// (ties go to the earlier mask) and drops masks left empty. Appends one
// warning per affected mask.
void resolve_overlaps(MaskSet& masks, std::vector<std::string>* warnings);

MaskSet parse_masks(std::string_view json_text, OverlapPolicy policy,
                    std::vector<std::string>* warnings = nullptr,
                    std::string_view source = "<memory>");
MaskSet load_masks(const std::filesystem::path& path,
                   OverlapPolicy policy = OverlapPolicy::kStrict,
                   std::vector<std::string>* warnings = nullptr);

std::string serialize_masks(const MaskSet& masks);

}  // namespace zsba
