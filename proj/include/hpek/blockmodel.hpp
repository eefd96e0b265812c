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
 * \file hpek/blockmodel.hpp
 * Minimal block chain secured by iterated-hash proof-of-work.
 *
 * Block content is serialised canonically as
 *
 *     previous_hash || u64be(generation_time) || u32be(tx count)
 *                   || for each tx: u32be(len) || tx bytes
 *
 * and the block hash is the qualifying digest h_nonce of the PoW chain that
 * starts from that content. The genesis block links to the all-zero digest.
 */

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hpek/hash_suite.hpp"

namespace hpek {

struct Block {
  Digest previous_hash;
  std::vector<Bytes> transactions;
  std::int64_t generation_time{0};  ///< Unix seconds, UTC
  std::uint64_t nonce{0};
  Digest block_hash;

  friend bool operator==(const Block&, const Block&) = default;
};

struct Chain {
  HashAlgorithmId alg{algorithms::sha256};
  unsigned k{8};
  std::vector<Block> blocks;
};

enum class VerifyFailure : std::uint8_t {
  None,
  Linkage,          ///< previous_hash does not match the predecessor (or genesis rule)
  NonceRange,       ///< nonce is 0 or beyond the replay bound for k
  HashMismatch,     ///< replayed h_nonce differs from block_hash
  Difficulty,       ///< block_hash has fewer than k leading zero bits
  NonceNotMinimal,  ///< an earlier digest in the replay already met the target
  Malformed,        ///< wrong digest length or oversized transaction
};

std::string_view to_string(VerifyFailure reason) noexcept;

struct VerifyReport {
  bool valid{true};
  std::size_t failing_index{0};  ///< meaningful only when !valid
  VerifyFailure reason{VerifyFailure::None};
  std::string detail;
};

/// Big-endian 4-byte length prefix. Throws InvalidInput above 2^32 - 1.
void append_length_prefix(Bytes& out, std::size_t length);

Bytes canonical_block_content(const Digest& previous_hash, const std::vector<Bytes>& transactions,
                              std::int64_t generation_time);

/// An empty chain for (alg, k). Throws InvalidInput if k exceeds the digest length.
Chain make_chain(HashAlgorithmId alg, unsigned k);

/// Mines a block on top of `chain` without modifying it.
Block mine_block(const Chain& chain, std::vector<Bytes> transactions, std::int64_t generation_time);

/// mine_block followed by push_back.
const Block& append_block(Chain& chain, std::vector<Bytes> transactions, std::int64_t generation_time);

/// Replays every block's PoW; stops at the first failure.
VerifyReport verify_chain(const Chain& chain);

inline constexpr std::string_view chain_file_magic = "HPEK1";

/// Binary export: magic, u8 name length + algorithm name, u32be k,
/// u32be block count, then per block canonical content || u64be nonce || block_hash.
Bytes serialize_chain(const Chain& chain);

/// Inverse of serialize_chain; re-verifies and throws InvalidInput on any defect.
Chain deserialize_chain(ByteView data);

void export_chain(const Chain& chain, const std::filesystem::path& path);
Chain import_chain(const std::filesystem::path& path);

}  // namespace hpek
