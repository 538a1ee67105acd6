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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zsba/similarity.hpp"
#include "zsba/vocabulary.hpp"

namespace zsba {

// ZSBA embedding file, little-endian, no padding:
//   "ZSBA" | u32 version (=1) | u32 dimension L | u32 count N
//   N x ( u32 key length | key bytes | L x f32 )
inline constexpr char kZsbaMagic[4] = {'Z', 'S', 'B', 'A'};
inline constexpr std::uint32_t kZsbaVersion = 1;

// Key schema shared with the exporter.
//   text::<prompt>                 text encoder output for a rendered prompt
//   img::<image_id>                image encoder output for the full image
//   img::<image_id>::mask::<mask>  image encoder output for a masked image
std::string text_key(std::string_view prompt);
std::string image_key(std::string_view image_id,
                      std::optional<std::string_view> mask_id = std::nullopt);

// Precomputed encoder outputs keyed by string. Entries keep insertion order
// so that a loaded file can be written back byte-for-byte.
class EmbeddingStore {
 public:
  explicit EmbeddingStore(std::uint32_t dimension);

  std::uint32_t dimension() const { return dimension_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<std::pair<std::string, Embedding>>& entries() const {
    return entries_;
  }

  // Throws kDuplicateKey, kDimensionMismatch, kNonFinite or kValidation
  // (empty key).
  void insert(std::string key, Embedding value);
  bool erase(std::string_view key);

  bool contains(std::string_view key) const;
  const Embedding* find(std::string_view key) const;
  // Throws kMissingKey.
  const Embedding& at(std::string_view key) const;

 private:
  std::uint32_t dimension_;
  std::vector<std::pair<std::string, Embedding>> entries_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

EmbeddingStore decode_embeddings(std::span<const std::byte> bytes);
std::vector<std::byte> encode_embeddings(const EmbeddingStore& store);

EmbeddingStore load_embeddings(const std::filesystem::path& path);
void write_embeddings(const EmbeddingStore& store,
                      const std::filesystem::path& path);

// Exact-match lookup of "text::" + prompt. Throws kMissingKey naming the
// prompt.
const Embedding& text_embedding(const EmbeddingStore& store,
                                std::string_view prompt);

const Embedding& image_embedding(
    const EmbeddingStore& store, std::string_view image_id,
    std::optional<std::string_view> mask_id = std::nullopt);

// Text embeddings for every category of `task`, in category order.
std::vector<Embedding> category_embeddings(const TaskSpec& task,
                                           const EmbeddingStore& store);

}  // namespace zsba
