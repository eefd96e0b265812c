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

#include "hpek/blockmodel.hpp"

#include <fstream>
#include <iterator>
#include <limits>

#include "hpek/bitops.hpp"
#include "hpek/error.hpp"
#include "hpek/pow.hpp"

namespace hpek {
namespace {

void append_be(Bytes& out, std::uint64_t value, int bytes) {
  for (int shift = 8 * (bytes - 1); shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>(value >> shift));
  }
}

class Reader {
 public:
  explicit Reader(ByteView data) : data_(data) {}

  ByteView take(std::size_t n) {
    if (data_.size() - pos_ < n) throw InvalidInput("chain file truncated at offset " + std::to_string(pos_));
    ByteView out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  std::uint64_t be(int bytes) {
    std::uint64_t v = 0;
    for (auto b : take(static_cast<std::size_t>(bytes))) v = v << 8 | b;
    return v;
  }

  bool done() const noexcept { return pos_ == data_.size(); }

 private:
  ByteView data_;
  std::size_t pos_{0};
};

VerifyReport fail(std::size_t index, VerifyFailure reason, std::string detail) {
  return {false, index, reason, std::move(detail)};
}

}  // namespace

std::string_view to_string(VerifyFailure reason) noexcept {
  switch (reason) {
    case VerifyFailure::None: return "ok";
    case VerifyFailure::Linkage: return "linkage";
    case VerifyFailure::NonceRange: return "nonce-range";
    case VerifyFailure::HashMismatch: return "hash-mismatch";
    case VerifyFailure::Difficulty: return "difficulty";
    case VerifyFailure::NonceNotMinimal: return "nonce-not-minimal";
    case VerifyFailure::Malformed: return "malformed";
  }
  return "unknown";
}

void append_length_prefix(Bytes& out, std::size_t length) {
  if (length > std::numeric_limits<std::uint32_t>::max()) {
    throw InvalidInput("transaction of " + std::to_string(length) +
                       " bytes exceeds the 2^32-1 byte limit");
  }
  append_be(out, length, 4);
}

Bytes canonical_block_content(const Digest& previous_hash, const std::vector<Bytes>& transactions,
                              std::int64_t generation_time) {
  Bytes out(previous_hash.bytes().begin(), previous_hash.bytes().end());
  append_be(out, static_cast<std::uint64_t>(generation_time), 8);
  append_length_prefix(out, transactions.size());
  for (const auto& tx : transactions) {
    append_length_prefix(out, tx.size());
    out.insert(out.end(), tx.begin(), tx.end());
  }
  return out;
}

Chain make_chain(HashAlgorithmId alg, unsigned k) {
  if (!alg.is_valid()) throw ConfigError("make_chain: unsupported hash algorithm");
  if (k > alg.output_bits) throw InvalidInput("make_chain: k exceeds digest length");
  return {alg, k, {}};
}

Block mine_block(const Chain& chain, std::vector<Bytes> transactions, std::int64_t generation_time) {
  Digest previous = chain.blocks.empty() ? Digest::zero(chain.alg.output_bytes())
                                         : chain.blocks.back().block_hash;
  const Bytes content = canonical_block_content(previous, transactions, generation_time);
  const auto sample = pow_search(chain.alg, content, chain.k, default_max_iterations(chain.k));
  return {previous, std::move(transactions), generation_time, sample.nonce, sample.qualifying_digest};
}

const Block& append_block(Chain& chain, std::vector<Bytes> transactions, std::int64_t generation_time) {
  chain.blocks.push_back(mine_block(chain, std::move(transactions), generation_time));
  return chain.blocks.back();
}

VerifyReport verify_chain(const Chain& chain) {
  if (!chain.alg.is_valid() || chain.k > chain.alg.output_bits) {
    return fail(0, VerifyFailure::Malformed, "invalid chain parameters");
  }
  const std::size_t width = chain.alg.output_bytes();
  const std::uint64_t bound = default_max_iterations(chain.k);
  Hasher hasher(chain.alg);

  for (std::size_t i = 0; i < chain.blocks.size(); ++i) {
    const Block& b = chain.blocks[i];
    if (b.previous_hash.byte_length() != width || b.block_hash.byte_length() != width) {
      return fail(i, VerifyFailure::Malformed, "digest length does not match the chain algorithm");
    }
    const Digest expected_prev = i == 0 ? Digest::zero(width) : chain.blocks[i - 1].block_hash;
    if (!(b.previous_hash == expected_prev)) {
      return fail(i, VerifyFailure::Linkage, "previous_hash does not match the preceding block");
    }
    if (b.nonce == 0 || b.nonce > bound) {
      return fail(i, VerifyFailure::NonceRange, "nonce " + std::to_string(b.nonce) + " outside [1, " +
                                                    std::to_string(bound) + "]");
    }

    Bytes content;
    try {
      content = canonical_block_content(b.previous_hash, b.transactions, b.generation_time);
    } catch (const InvalidInput& e) {
      return fail(i, VerifyFailure::Malformed, e.what());
    }
    Digest h = hasher.digest(content);
    for (std::uint64_t n = 1; n < b.nonce; ++n) {
      if (leading_zero_bits(h) >= chain.k) {
        return fail(i, VerifyFailure::NonceNotMinimal,
                    "digest " + std::to_string(n) + " already meets the target");
      }
      h = hasher.digest(h.bytes());
    }
    if (!(h == b.block_hash)) {
      return fail(i, VerifyFailure::HashMismatch, "replayed digest differs from block_hash");
    }
    if (leading_zero_bits(h) < chain.k) {
      return fail(i, VerifyFailure::Difficulty, "block_hash has fewer than k leading zero bits");
    }
  }
  return {};
}

Bytes serialize_chain(const Chain& chain) {
  Bytes out(chain_file_magic.begin(), chain_file_magic.end());
  const std::string name = to_string(chain.alg);
  out.push_back(static_cast<std::uint8_t>(name.size()));
  out.insert(out.end(), name.begin(), name.end());
  append_be(out, chain.k, 4);
  if (chain.blocks.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw InvalidInput("chain too long to serialise");
  }
  append_be(out, chain.blocks.size(), 4);
  for (const auto& b : chain.blocks) {
    const Bytes content = canonical_block_content(b.previous_hash, b.transactions, b.generation_time);
    out.insert(out.end(), content.begin(), content.end());
    append_be(out, b.nonce, 8);
    out.insert(out.end(), b.block_hash.bytes().begin(), b.block_hash.bytes().end());
  }
  return out;
}

Chain deserialize_chain(ByteView data) {
  Reader in(data);
  const auto magic = in.take(chain_file_magic.size());
  if (!std::equal(magic.begin(), magic.end(), chain_file_magic.begin())) {
    throw InvalidInput("not a chain file (bad magic)");
  }
  const auto name_len = static_cast<std::size_t>(in.be(1));
  const auto name = in.take(name_len);
  HashAlgorithmId alg;
  try {
    alg = parse_algorithm(std::string(name.begin(), name.end()));
  } catch (const UsageError& e) {
    throw InvalidInput(std::string("chain file: ") + e.what());
  }
  const auto k = static_cast<unsigned>(in.be(4));
  if (k > alg.output_bits) throw InvalidInput("chain file: k exceeds digest length");
  const auto count = in.be(4);
  const std::size_t width = alg.output_bytes();

  Chain chain{alg, k, {}};
  for (std::uint64_t i = 0; i < count; ++i) {
    Block b;
    b.previous_hash = Digest(in.take(width));
    b.generation_time = static_cast<std::int64_t>(in.be(8));
    const auto tx_count = in.be(4);
    for (std::uint64_t t = 0; t < tx_count; ++t) {
      const auto len = static_cast<std::size_t>(in.be(4));
      const auto tx = in.take(len);
      b.transactions.emplace_back(tx.begin(), tx.end());
    }
    b.nonce = in.be(8);
    b.block_hash = Digest(in.take(width));
    chain.blocks.push_back(std::move(b));
  }
  if (!in.done()) throw InvalidInput("chain file: trailing bytes after last block");

  const auto report = verify_chain(chain);
  if (!report.valid) {
    throw InvalidInput("chain file fails verification at block " +
                       std::to_string(report.failing_index) + ": " +
                       std::string(to_string(report.reason)));
  }
  return chain;
}

void export_chain(const Chain& chain, const std::filesystem::path& path) {
  const Bytes data = serialize_chain(chain);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

Chain import_chain(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return deserialize_chain(data);
}

}  // namespace hpek
