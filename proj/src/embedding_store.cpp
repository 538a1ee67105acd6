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

#include "zsba/embedding_store.hpp"

#include <bit>
#include <cmath>
#include <cstring>

#include "io_util.hpp"
#include "zsba/error.hpp"

namespace zsba {
namespace {

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::byte> bytes) : bytes_(bytes) {}

  std::size_t remaining() const { return bytes_.size() - pos_; }

  std::uint32_t u32(const char* what) {
    need(4, what);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
      v |= static_cast<std::uint32_t>(bytes_[pos_ + i]) << (8 * i);
    }
    pos_ += 4;
    return v;
  }

  float f32(const char* what) { return std::bit_cast<float>(u32(what)); }

  std::string string(std::size_t n, const char* what) {
    need(n, what);
    std::string s(reinterpret_cast<const char*>(bytes_.data() + pos_), n);
    pos_ += n;
    return s;
  }

 private:
  void need(std::size_t n, const char* what) {
    if (remaining() < n) {
      throw Error(ErrorKind::kTruncatedFile,
                  std::string("file ends inside ") + what + " at byte " +
                      std::to_string(pos_));
    }
  }

  std::span<const std::byte> bytes_;
  std::size_t pos_ = 0;
};

void put_u32(std::vector<std::byte>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) {
    out.push_back(static_cast<std::byte>((v >> (8 * i)) & 0xFFu));
  }
}

}  // namespace

std::string text_key(std::string_view prompt) {
  return "text::" + std::string(prompt);
}

std::string image_key(std::string_view image_id,
                      std::optional<std::string_view> mask_id) {
  std::string key = "img::" + std::string(image_id);
  if (mask_id) key += "::mask::" + std::string(*mask_id);
  return key;
}

EmbeddingStore::EmbeddingStore(std::uint32_t dimension) : dimension_(dimension) {
  if (dimension == 0) {
    throw Error(ErrorKind::kValidation, "embedding dimension must be >= 1");
  }
}

void EmbeddingStore::insert(std::string key, Embedding value) {
  if (key.empty()) throw Error(ErrorKind::kValidation, "empty embedding key");
  if (value.size() != dimension_) {
    throw Error(ErrorKind::kDimensionMismatch,
                "\"" + key + "\" has length " + std::to_string(value.size()) +
                    ", store dimension is " + std::to_string(dimension_));
  }
  for (float v : value) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::kNonFinite, "\"" + key + "\" has a NaN/Inf value");
    }
  }
  if (index_.contains(key)) {
    throw Error(ErrorKind::kDuplicateKey, "\"" + key + "\"");
  }
  index_.emplace(key, entries_.size());
  entries_.emplace_back(std::move(key), std::move(value));
}

bool EmbeddingStore::erase(std::string_view key) {
  auto it = index_.find(key);
  if (it == index_.end()) return false;
  entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(it->second));
  index_.clear();
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    index_.emplace(entries_[i].first, i);
  }
  return true;
}

bool EmbeddingStore::contains(std::string_view key) const {
  return index_.find(key) != index_.end();
}

const Embedding* EmbeddingStore::find(std::string_view key) const {
  auto it = index_.find(key);
  return it == index_.end() ? nullptr : &entries_[it->second].second;
}

const Embedding& EmbeddingStore::at(std::string_view key) const {
  if (const Embedding* e = find(key)) return *e;
  throw Error(ErrorKind::kMissingKey, "\"" + std::string(key) + "\"");
}

EmbeddingStore decode_embeddings(std::span<const std::byte> bytes) {
  ByteReader in(bytes);
  if (in.remaining() < 4 ||
      std::memcmp(bytes.data(), kZsbaMagic, sizeof(kZsbaMagic)) != 0) {
    throw Error(ErrorKind::kBadMagic, "expected \"ZSBA\"");
  }
  in.string(4, "magic");
  const std::uint32_t version = in.u32("version");
  if (version != kZsbaVersion) {
    throw Error(ErrorKind::kBadVersion,
                "version " + std::to_string(version) + " (supported: 1)");
  }
  const std::uint32_t dimension = in.u32("dimension");
  const std::uint32_t count = in.u32("record count");
  if (dimension == 0) throw Error(ErrorKind::kValidation, "dimension 0");

  EmbeddingStore store(dimension);
  for (std::uint32_t r = 0; r < count; ++r) {
    const std::uint32_t key_len = in.u32("key length");
    std::string key = in.string(key_len, "key");
    Embedding values(dimension);
    for (float& v : values) v = in.f32("embedding values");
    store.insert(std::move(key), std::move(values));
  }
  if (in.remaining() != 0) {
    throw Error(ErrorKind::kTrailingData,
                std::to_string(in.remaining()) + " bytes after last record");
  }
  return store;
}

std::vector<std::byte> encode_embeddings(const EmbeddingStore& store) {
  std::vector<std::byte> out;
  for (char c : kZsbaMagic) out.push_back(static_cast<std::byte>(c));
  put_u32(out, kZsbaVersion);
  put_u32(out, store.dimension());
  put_u32(out, static_cast<std::uint32_t>(store.size()));
  for (const auto& [key, values] : store.entries()) {
    put_u32(out, static_cast<std::uint32_t>(key.size()));
    for (char c : key) out.push_back(static_cast<std::byte>(c));
    for (float v : values) put_u32(out, std::bit_cast<std::uint32_t>(v));
  }
  return out;
}

EmbeddingStore load_embeddings(const std::filesystem::path& path) {
  const std::string bytes = detail::read_file(path);
  try {
    return decode_embeddings(std::as_bytes(std::span(bytes.data(), bytes.size())));
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.message());
  }
}

void write_embeddings(const EmbeddingStore& store,
                      const std::filesystem::path& path) {
  const std::vector<std::byte> bytes = encode_embeddings(store);
  detail::write_file(path, std::string_view(reinterpret_cast<const char*>(bytes.data()),
                                            bytes.size()));
}

const Embedding& text_embedding(const EmbeddingStore& store,
                                std::string_view prompt) {
  if (const Embedding* e = store.find(text_key(prompt))) return *e;
  throw Error(ErrorKind::kMissingKey,
              "no text embedding for prompt \"" + std::string(prompt) + "\"");
}

const Embedding& image_embedding(const EmbeddingStore& store,
                                 std::string_view image_id,
                                 std::optional<std::string_view> mask_id) {
  if (const Embedding* e = store.find(image_key(image_id, mask_id))) return *e;
  std::string what = "no image embedding for \"" + std::string(image_id) + "\"";
  if (mask_id) what += " mask \"" + std::string(*mask_id) + "\"";
  throw Error(ErrorKind::kMissingKey, what);
}

std::vector<Embedding> category_embeddings(const TaskSpec& task,
                                           const EmbeddingStore& store) {
  std::vector<Embedding> out;
  out.reserve(task.size());
  for (const CategorySpec& c : task.categories) {
    out.push_back(text_embedding(store, render_prompt(task, c)));
  }
  return out;
}

}  // namespace zsba
