/*
 * Copyright 2026 The hpek Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

/**
 * \file hpek/hash_suite.hpp
 * Uniform access to the twelve evaluated digest algorithms.
 *
 * SHA-1, SHA-2 and SHA-3 are served by OpenSSL; BLAKE2 is BLAKE2b (RFC 7693)
 * from libsodium with the digest length parameter set to 32, 48 or 64 bytes.
 * Nothing here re-implements a compression function.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hpek {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

enum class HashFamily : std::uint8_t { SHA1, SHA2, SHA3, BLAKE2 };

struct HashAlgorithmId {
  HashFamily family{HashFamily::SHA2};
  unsigned output_bits{256};

  constexpr std::size_t output_bytes() const noexcept { return output_bits / 8; }

  /// True for exactly the twelve supported (family, length) combinations.
  constexpr bool is_valid() const noexcept {
    switch (family) {
      case HashFamily::SHA1:
        return output_bits == 160;
      case HashFamily::SHA2:
      case HashFamily::SHA3:
        return output_bits == 224 || output_bits == 256 || output_bits == 384 ||
               output_bits == 512;
      case HashFamily::BLAKE2:
        return output_bits == 256 || output_bits == 384 || output_bits == 512;
    }
    return false;
  }

  friend constexpr bool operator==(const HashAlgorithmId&, const HashAlgorithmId&) = default;
};

namespace algorithms {
inline constexpr HashAlgorithmId sha1{HashFamily::SHA1, 160};
inline constexpr HashAlgorithmId sha224{HashFamily::SHA2, 224};
inline constexpr HashAlgorithmId sha256{HashFamily::SHA2, 256};
inline constexpr HashAlgorithmId sha384{HashFamily::SHA2, 384};
inline constexpr HashAlgorithmId sha512{HashFamily::SHA2, 512};
inline constexpr HashAlgorithmId sha3_224{HashFamily::SHA3, 224};
inline constexpr HashAlgorithmId sha3_256{HashFamily::SHA3, 256};
inline constexpr HashAlgorithmId sha3_384{HashFamily::SHA3, 384};
inline constexpr HashAlgorithmId sha3_512{HashFamily::SHA3, 512};
inline constexpr HashAlgorithmId blake2_256{HashFamily::BLAKE2, 256};
inline constexpr HashAlgorithmId blake2_384{HashFamily::BLAKE2, 384};
inline constexpr HashAlgorithmId blake2_512{HashFamily::BLAKE2, 512};
}  // namespace algorithms

/// All twelve ids in table order: SHA-1, SHA-2, SHA-3, BLAKE2, ascending length.
const std::vector<HashAlgorithmId>& list_algorithms();

/// The SHA-256 / SHA3-256 / BLAKE2-256 trio.
const std::vector<HashAlgorithmId>& mainstream_algorithms();

/// Canonical name, e.g. "SHA3-384". Throws ConfigError for invalid ids.
std::string to_string(HashAlgorithmId alg);

/// Case-insensitive inverse of to_string. Throws UsageError naming the token.
HashAlgorithmId parse_algorithm(std::string_view name);

/// A digest value of 1..64 bytes. Immutable once built.
class Digest {
 public:
  static constexpr std::size_t max_bytes = 64;

  Digest() = default;
  explicit Digest(ByteView bytes);

  static Digest zero(std::size_t bytes);
  static Digest from_hex(std::string_view hex);

  ByteView bytes() const noexcept { return {storage_.data(), size_}; }
  std::size_t byte_length() const noexcept { return size_; }
  std::size_t bit_length() const noexcept { return std::size_t{size_} * 8; }
  bool empty() const noexcept { return size_ == 0; }

  std::string to_hex() const;

  friend bool operator==(const Digest& a, const Digest& b) noexcept;

 private:
  std::array<std::uint8_t, max_bytes> storage_{};
  std::uint8_t size_{0};
};

/// Reusable digest context for one algorithm. Not thread-safe; use one per thread.
class Hasher {
 public:
  explicit Hasher(HashAlgorithmId alg);
  ~Hasher();
  Hasher(Hasher&&) noexcept;
  Hasher& operator=(Hasher&&) noexcept;
  Hasher(const Hasher&) = delete;
  Hasher& operator=(const Hasher&) = delete;

  HashAlgorithmId algorithm() const noexcept { return alg_; }

  Digest digest(ByteView message);

 private:
  struct Impl;
  HashAlgorithmId alg_;
  std::unique_ptr<Impl> impl_;
};

/// One-shot digest. Throws ConfigError if alg is not one of the twelve.
Digest compute_digest(HashAlgorithmId alg, ByteView message);

inline ByteView as_bytes(std::string_view text) noexcept {
  return {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()};
}

}  // namespace hpek
