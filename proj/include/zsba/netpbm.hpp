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

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "zsba/raster.hpp"

namespace zsba {

// Binary PGM (P5, maxval 255): "P5\n<W> <H>\n255\n" then W*H label bytes.
std::string encode_pgm(const SegmentationMap& map);
// Accepts any P5 header with maxval 255 (comments and arbitrary whitespace
// allowed). Throws kParse or kTruncatedFile.
SegmentationMap decode_pgm(std::string_view bytes);

void write_pgm(const SegmentationMap& map, const std::filesystem::path& path);
SegmentationMap read_pgm(const std::filesystem::path& path);

// Binary PPM (P6, maxval 255).
std::string encode_ppm(const RasterImage& image);
void write_ppm(const RasterImage& image, const std::filesystem::path& path);

using Rgb = std::array<std::uint8_t, 3>;

// Fixed overlay palette. Categories 0..11 use the table below and wrap
// around beyond it; kUnlabeled is black.
//   0 (200, 60, 60)   1 (230, 200, 120)  2 (60, 120, 220)  3 (60, 180, 75)
//   4 (245, 130, 48)  5 (145, 30, 180)   6 (70, 240, 240)  7 (240, 50, 230)
//   8 (210, 245, 60)  9 (250, 190, 212) 10 (0, 128, 128)  11 (128, 128, 0)
Rgb palette_color(std::uint8_t label);

// Color-coded rendering of a label map.
RasterImage colorize(const SegmentationMap& map);

}  // namespace zsba
