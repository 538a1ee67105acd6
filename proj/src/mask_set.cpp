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

#include "zsba/mask_set.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <json.hpp>

#include "io_util.hpp"
#include "zsba/error.hpp"

namespace zsba {
namespace {

using nlohmann::json;

std::string pixel_name(const MaskSet& set, std::size_t p) {
  return "(row " + std::to_string(p / set.width) + ", col " +
         std::to_string(p % set.width) + ")";
}

}  // namespace

std::size_t BinaryMask::area() const {
  return static_cast<std::size_t>(std::count(pixels.begin(), pixels.end(), 1));
}

std::vector<std::uint64_t> rle_encode(std::span<const std::uint8_t> pixels) {
  std::vector<std::uint64_t> counts;
  std::uint8_t current = 0;
  std::uint64_t run = 0;
  for (std::uint8_t p : pixels) {
    const std::uint8_t bit = p != 0 ? 1 : 0;
    if (bit != current) {
      counts.push_back(run);
      current = bit;
      run = 0;
    }
    ++run;
  }
  if (run > 0 || counts.empty()) counts.push_back(run);
  return counts;
}

std::vector<std::uint8_t> rle_decode(std::span<const std::uint64_t> counts,
                                     std::size_t pixel_count) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i > 0 && counts[i] == 0) {
      throw Error(ErrorKind::kParse,
                  "non-canonical RLE: empty run at position " + std::to_string(i));
    }
    total += counts[i];
    if (total > pixel_count) break;
  }
  if (total != pixel_count) {
    throw Error(ErrorKind::kRleLengthMismatch,
                "runs cover " + (total > pixel_count ? std::string("more than ")
                                                     : std::to_string(total) + " of ") +
                    std::to_string(pixel_count) + " pixels");
  }
  std::vector<std::uint8_t> pixels;
  pixels.reserve(pixel_count);
  std::uint8_t bit = 0;
  for (std::uint64_t run : counts) {
    pixels.insert(pixels.end(), run, bit);
    bit ^= 1;
  }
  return pixels;
}

void check_masks(const MaskSet& set) {
  if (set.width == 0 || set.height == 0) {
    throw Error(ErrorKind::kValidation, "mask set width and height must be >= 1");
  }
  std::vector<int> owner(set.pixel_count(), -1);
  std::set<std::string_view> ids;
  for (std::size_t j = 0; j < set.masks.size(); ++j) {
    const BinaryMask& m = set.masks[j];
    if (m.width != set.width || m.height != set.height ||
        m.pixels.size() != set.pixel_count()) {
      throw Error(ErrorKind::kShapeMismatch,
                  "mask \"" + m.id + "\" is not " + std::to_string(set.width) +
                      "x" + std::to_string(set.height));
    }
    if (!ids.insert(m.id).second) {
      throw Error(ErrorKind::kValidation, "duplicate mask id \"" + m.id + "\"");
    }
    bool any = false;
    for (std::size_t p = 0; p < m.pixels.size(); ++p) {
      if (m.pixels[p] == 0) continue;
      any = true;
      if (owner[p] >= 0) {
        throw Error(ErrorKind::kOverlappingMasks,
                    "masks \"" + set.masks[static_cast<std::size_t>(owner[p])].id +
                        "\" and \"" + m.id + "\" both cover pixel " +
                        pixel_name(set, p));
      }
      owner[p] = static_cast<int>(j);
    }
    if (!any) {
      throw Error(ErrorKind::kEmptyMask, "mask \"" + m.id + "\" covers no pixels");
    }
  }
}

void resolve_overlaps(MaskSet& set, std::vector<std::string>* warnings) {
  std::vector<std::size_t> areas;
  areas.reserve(set.masks.size());
  for (const BinaryMask& m : set.masks) areas.push_back(m.area());

  std::vector<std::size_t> contested(set.masks.size(), 0);
  for (std::size_t p = 0; p < set.pixel_count(); ++p) {
    std::size_t winner = set.masks.size();
    std::size_t covering = 0;
    for (std::size_t j = 0; j < set.masks.size(); ++j) {
      if (set.masks[j].pixels[p] == 0) continue;
      ++covering;
      if (winner == set.masks.size() || areas[j] > areas[winner]) winner = j;
    }
    if (covering < 2) continue;
    for (std::size_t j = 0; j < set.masks.size(); ++j) {
      if (j != winner && set.masks[j].pixels[p] != 0) {
        set.masks[j].pixels[p] = 0;
        ++contested[j];
      }
    }
  }

  std::vector<BinaryMask> kept;
  for (std::size_t j = 0; j < set.masks.size(); ++j) {
    BinaryMask& m = set.masks[j];
    const bool empty = m.area() == 0;
    if (warnings != nullptr && (contested[j] > 0 || empty)) {
      std::string w = "mask \"" + m.id + "\": ";
      if (contested[j] > 0) {
        w += std::to_string(contested[j]) + " overlapping pixels reassigned to larger masks";
      }
      if (empty) w += contested[j] > 0 ? "; dropped (now empty)" : "dropped (empty)";
      warnings->push_back(std::move(w));
    }
    if (!empty) kept.push_back(std::move(m));
  }
  set.masks = std::move(kept);
}

MaskSet parse_masks(std::string_view json_text, OverlapPolicy policy,
                    std::vector<std::string>* warnings, std::string_view source) {
  const std::string where(source);
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse,
                where + ": " +
                    detail::describe_offset(json_text, e.byte == 0 ? 0 : e.byte - 1) +
                    ": malformed JSON");
  }
  auto fail = [&](const std::string& path, const std::string& what) {
    throw Error(ErrorKind::kParse, where + ": " + path + ": " + what);
  };
  if (!doc.is_object()) fail("$", "expected an object");
  for (const char* key : {"width", "height", "masks"}) {
    if (!doc.contains(key)) fail("$", std::string("missing \"") + key + "\"");
  }
  if (!doc["width"].is_number_unsigned() || !doc["height"].is_number_unsigned()) {
    fail("$", "width and height must be non-negative integers");
  }
  if (!doc["masks"].is_array()) fail("$.masks", "expected an array");

  MaskSet set;
  set.width = doc["width"].get<std::uint32_t>();
  set.height = doc["height"].get<std::uint32_t>();
  if (set.width == 0 || set.height == 0) {
    throw Error(ErrorKind::kValidation, where + ": width and height must be >= 1");
  }
  const json& masks = doc["masks"];
  for (std::size_t j = 0; j < masks.size(); ++j) {
    const std::string path = "$.masks[" + std::to_string(j) + "]";
    const json& entry = masks[j];
    if (!entry.is_object() || !entry.contains("id") || !entry["id"].is_string()) {
      fail(path, "expected an object with string \"id\"");
    }
    if (!entry.contains("rle") || !entry["rle"].is_array()) {
      fail(path, "expected an array \"rle\"");
    }
    std::vector<std::uint64_t> counts;
    for (const json& c : entry["rle"]) {
      if (!c.is_number_unsigned()) fail(path + ".rle", "counts must be non-negative integers");
      counts.push_back(c.get<std::uint64_t>());
    }
    BinaryMask mask;
    mask.id = entry["id"].get<std::string>();
    mask.width = set.width;
    mask.height = set.height;
    try {
      mask.pixels = rle_decode(counts, set.pixel_count());
    } catch (const Error& e) {
      throw Error(e.kind(), where + ": mask \"" + mask.id + "\": " + e.message());
    }
    set.masks.push_back(std::move(mask));
  }

  if (policy == OverlapPolicy::kLenient) resolve_overlaps(set, warnings);
  try {
    check_masks(set);
  } catch (const Error& e) {
    throw Error(e.kind(), where + ": " + e.message());
  }
  return set;
}

MaskSet load_masks(const std::filesystem::path& path, OverlapPolicy policy,
                   std::vector<std::string>* warnings) {
  return parse_masks(detail::read_file(path), policy, warnings, path.string());
}

std::string serialize_masks(const MaskSet& set) {
  json masks = json::array();
  for (const BinaryMask& m : set.masks) {
    masks.push_back({{"id", m.id}, {"rle", rle_encode(m.pixels)}});
  }
  return json{{"width", set.width}, {"height", set.height}, {"masks", std::move(masks)}}
             .dump() +
         "\n";
}

}  // namespace zsba
