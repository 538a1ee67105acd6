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

#include "zsba/netpbm.hpp"

#include <cctype>

#include "io_util.hpp"
#include "zsba/error.hpp"

namespace zsba {
namespace {

constexpr std::array<Rgb, 12> kPalette = {{
    {200, 60, 60},  {230, 200, 120}, {60, 120, 220}, {60, 180, 75},
    {245, 130, 48}, {145, 30, 180},  {70, 240, 240}, {240, 50, 230},
    {210, 245, 60}, {250, 190, 212}, {0, 128, 128},  {128, 128, 0},
}};

std::string header(char kind, std::uint32_t width, std::uint32_t height) {
  return std::string("P") + kind + "\n" + std::to_string(width) + " " +
         std::to_string(height) + "\n255\n";
}

class HeaderReader {
 public:
  explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

  std::uint32_t number(const char* what) {
    skip_space_and_comments();
    std::uint64_t value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(bytes_[pos_] - '0');
      if (value > 0xFFFFFFFFu) throw Error(ErrorKind::kParse, std::string(what) + " too large");
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw Error(ErrorKind::kParse, std::string("expected ") + what);
    return static_cast<std::uint32_t>(value);
  }

  // Exactly one whitespace byte separates maxval from the raster.
  std::size_t raster_start() {
    if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      throw Error(ErrorKind::kParse, "expected whitespace after maxval");
    }
    return pos_ + 1;
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view bytes_;
  std::size_t pos_ = 2;
};

}  // namespace

std::string encode_pgm(const SegmentationMap& map) {
  std::string out = header('5', map.width, map.height);
  out.append(reinterpret_cast<const char*>(map.labels.data()), map.labels.size());
  return out;
}

SegmentationMap decode_pgm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw Error(ErrorKind::kParse, "not a binary PGM (P5)");
  }
  HeaderReader in(bytes);
  const std::uint32_t width = in.number("width");
  const std::uint32_t height = in.number("height");
  const std::uint32_t maxval = in.number("maxval");
  if (width == 0 || height == 0) throw Error(ErrorKind::kParse, "empty image");
  if (maxval != 255) {
    throw Error(ErrorKind::kParse, "maxval " + std::to_string(maxval) + " (need 255)");
  }
  const std::size_t start = in.raster_start();
  SegmentationMap map(width, height);
  if (bytes.size() - start < map.labels.size()) {
    throw Error(ErrorKind::kTruncatedFile, "PGM raster is short");
  }
  std::copy_n(bytes.begin() + static_cast<std::ptrdiff_t>(start), map.labels.size(),
              map.labels.begin());
  return map;
}

void write_pgm(const SegmentationMap& map, const std::filesystem::path& path) {
  detail::write_file(path, encode_pgm(map));
}

SegmentationMap read_pgm(const std::filesystem::path& path) {
  try {
    return decode_pgm(detail::read_file(path));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kIo) throw;
    throw Error(e.kind(), path.string() + ": " + e.message());
  }
}

std::string encode_ppm(const RasterImage& image) {
  std::string out = header('6', image.width, image.height);
  out.append(reinterpret_cast<const char*>(image.pixels.data()), image.pixels.size());
  return out;
}

void write_ppm(const RasterImage& image, const std::filesystem::path& path) {
  detail::write_file(path, encode_ppm(image));
}

Rgb palette_color(std::uint8_t label) {
  if (label == kUnlabeled) return {0, 0, 0};
  return kPalette[label % kPalette.size()];
}

RasterImage colorize(const SegmentationMap& map) {
  RasterImage image(map.width, map.height);
  for (std::size_t p = 0; p < map.labels.size(); ++p) {
    const Rgb c = palette_color(map.labels[p]);
    image.pixels[3 * p] = c[0];
    image.pixels[3 * p + 1] = c[1];
    image.pixels[3 * p + 2] = c[2];
  }
  return image;
}

}  // namespace zsba
