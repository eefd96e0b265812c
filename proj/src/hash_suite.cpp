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

#include "hpek/hash_suite.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <optional>

#include <openssl/evp.h>
#include <sodium.h>

#include "hpek/error.hpp"

namespace hpek {
namespace {

std::optional<std::size_t> index_of(HashAlgorithmId alg) {
  const auto& all = list_algorithms();
  auto it = std::find(all.begin(), all.end(), alg);
  if (it == all.end()) return std::nullopt;
  return static_cast<std::size_t>(it - all.begin());
}

const char* openssl_name(HashAlgorithmId alg) {
  if (alg.family == HashFamily::SHA1) return "SHA1";
  if (alg.family == HashFamily::SHA2) {
    switch (alg.output_bits) {
      case 224: return "SHA224";
      case 256: return "SHA256";
      case 384: return "SHA384";
      case 512: return "SHA512";
    }
  }
  if (alg.family == HashFamily::SHA3) {
    switch (alg.output_bits) {
      case 224: return "SHA3-224";
      case 256: return "SHA3-256";
      case 384: return "SHA3-384";
      case 512: return "SHA3-512";
    }
  }
  return nullptr;
}

// Explicitly fetched once: implicit fetching on every EVP_DigestInit is slow in OpenSSL 3.
const EVP_MD* fetched_md(HashAlgorithmId alg) {
  static const auto table = [] {
    std::array<EVP_MD*, 12> mds{};
    const auto& all = list_algorithms();
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (const char* name = openssl_name(all[i])) {
        mds[i] = EVP_MD_fetch(nullptr, name, nullptr);
      }
    }
    return mds;
  }();
  auto idx = index_of(alg);
  const EVP_MD* md = idx ? table[*idx] : nullptr;
  if (md == nullptr) {
    throw ConfigError("OpenSSL provides no implementation for " + to_string(alg));
  }
  return md;
}

void require_valid(HashAlgorithmId alg) {
  if (!alg.is_valid()) {
    throw ConfigError("unsupported hash algorithm (family " +
                      std::to_string(static_cast<int>(alg.family)) + ", " +
                      std::to_string(alg.output_bits) + " bits)");
  }
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

const std::vector<HashAlgorithmId>& list_algorithms() {
  using namespace algorithms;
  static const std::vector<HashAlgorithmId> all{
      sha1,     sha224,   sha256,   sha384,     sha512,     sha3_224,
      sha3_256, sha3_384, sha3_512, blake2_256, blake2_384, blake2_512};
  return all;
}

const std::vector<HashAlgorithmId>& mainstream_algorithms() {
  using namespace algorithms;
  static const std::vector<HashAlgorithmId> trio{sha256, sha3_256, blake2_256};
  return trio;
}

std::string to_string(HashAlgorithmId alg) {
  require_valid(alg);
  switch (alg.family) {
    case HashFamily::SHA1: return "SHA-1";
    case HashFamily::SHA2: return "SHA-" + std::to_string(alg.output_bits);
    case HashFamily::SHA3: return "SHA3-" + std::to_string(alg.output_bits);
    case HashFamily::BLAKE2: return "BLAKE2-" + std::to_string(alg.output_bits);
  }
  return {};
}

HashAlgorithmId parse_algorithm(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (const auto& alg : list_algorithms()) {
    if (to_string(alg) == upper) return alg;
  }
  throw UsageError("unknown hash algorithm '" + std::string(name) + "'", std::string(name));
}

// Digest

Digest::Digest(ByteView bytes) {
  if (bytes.empty() || bytes.size() > max_bytes) {
    throw InvalidInput("digest length must be 1.." + std::to_string(max_bytes) +
                       " bytes, got " + std::to_string(bytes.size()));
  }
  std::copy(bytes.begin(), bytes.end(), storage_.begin());
  size_ = static_cast<std::uint8_t>(bytes.size());
}

Digest Digest::zero(std::size_t bytes) {
  std::array<std::uint8_t, max_bytes> buf{};
  if (bytes > max_bytes) throw InvalidInput("digest too long");
  return Digest(ByteView{buf.data(), bytes});
}

Digest Digest::from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw InvalidInput("odd-length hex string");
  std::array<std::uint8_t, max_bytes> buf{};
  if (hex.size() / 2 > max_bytes) throw InvalidInput("hex digest too long");
  for (std::size_t i = 0; i < hex.size() / 2; ++i) {
    int hi = hex_value(hex[2 * i]);
    int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw InvalidInput("invalid hex digit in '" + std::string(hex) + "'");
    buf[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return Digest(ByteView{buf.data(), hex.size() / 2});
}

std::string Digest::to_hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * size_);
  for (auto b : bytes()) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

bool operator==(const Digest& a, const Digest& b) noexcept {
  return a.size_ == b.size_ && std::memcmp(a.storage_.data(), b.storage_.data(), a.size_) == 0;
}

// Hasher

struct Hasher::Impl {
  const EVP_MD* md = nullptr;
  EVP_MD_CTX* ctx = nullptr;

  ~Impl() { EVP_MD_CTX_free(ctx); }
};

Hasher::Hasher(HashAlgorithmId alg) : alg_(alg), impl_(std::make_unique<Impl>()) {
  require_valid(alg);
  if (alg.family == HashFamily::BLAKE2) {
    static const bool sodium_ready = sodium_init() >= 0;
    if (!sodium_ready) throw ConfigError("libsodium failed to initialise");
    return;
  }
  impl_->md = fetched_md(alg);
  impl_->ctx = EVP_MD_CTX_new();
  if (impl_->ctx == nullptr) throw ConfigError("EVP_MD_CTX_new failed");
}

Hasher::~Hasher() = default;
Hasher::Hasher(Hasher&&) noexcept = default;
Hasher& Hasher::operator=(Hasher&&) noexcept = default;

Digest Hasher::digest(ByteView message) {
  std::array<std::uint8_t, Digest::max_bytes> out{};
  const std::size_t len = alg_.output_bytes();
  if (alg_.family == HashFamily::BLAKE2) {
    crypto_generichash_blake2b(out.data(), len, message.data(), message.size(), nullptr, 0);
  } else {
    unsigned int written = 0;
    if (EVP_DigestInit_ex2(impl_->ctx, impl_->md, nullptr) != 1 ||
        EVP_DigestUpdate(impl_->ctx, message.data(), message.size()) != 1 ||
        EVP_DigestFinal_ex(impl_->ctx, out.data(), &written) != 1 || written != len) {
      throw ConfigError("OpenSSL digest failed for " + to_string(alg_));
    }
  }
  return Digest(ByteView{out.data(), len});
}

Digest compute_digest(HashAlgorithmId alg, ByteView message) {
  require_valid(alg);
  thread_local std::array<std::unique_ptr<Hasher>, 12> cache;
  auto& slot = cache[*index_of(alg)];
  if (!slot) slot = std::make_unique<Hasher>(alg);
  return slot->digest(message);
}

}  // namespace hpek
