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

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "hpek/blockmodel.hpp"
#include "hpek/error.hpp"
#include "oracle/oracles.hpp"

namespace hpek {
namespace {

Bytes text(std::string_view s) { return Bytes(s.begin(), s.end()); }

Chain mined_chain(HashAlgorithmId alg, unsigned k, std::size_t blocks) {
  Chain chain = make_chain(alg, k);
  for (std::size_t i = 0; i < blocks; ++i) {
    append_block(chain, {text("alice->bob:" + std::to_string(i)), text("fee")},
                 1700000000 + static_cast<std::int64_t>(i) * 600);
  }
  return chain;
}

TEST(CanonicalContent, EmptyTransactionList) {
  const Bytes c = canonical_block_content(Digest::zero(32), {}, 5);
  ASSERT_EQ(c.size(), 32u + 8 + 4);
  EXPECT_EQ(Bytes(c.end() - 4, c.end()), (Bytes{0, 0, 0, 0}));
  EXPECT_EQ(Bytes(c.begin() + 32, c.begin() + 40), (Bytes{0, 0, 0, 0, 0, 0, 0, 5}));
}

TEST(CanonicalContent, LengthPrefixesMakeItInjective) {
  const Digest prev = Digest::zero(32);
  EXPECT_NE(canonical_block_content(prev, {text("ab"), text("c")}, 1),
            canonical_block_content(prev, {text("a"), text("bc")}, 1));
  EXPECT_NE(canonical_block_content(prev, {text("abc")}, 1),
            canonical_block_content(prev, {text("ab"), text("c")}, 1));
}

TEST(CanonicalContent, DecoderOracleRecoversFields) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> count(0, 6), len(0, 40);
  for (int trial = 0; trial < 300; ++trial) {
    const Digest prev(oracle::pseudorandom_message(rng(), 48));
    std::vector<Bytes> txs;
    for (int t = count(rng); t > 0; --t) txs.push_back(oracle::pseudorandom_message(rng(), static_cast<std::size_t>(len(rng))));
    const auto time = static_cast<std::int64_t>(rng() >> 2);
    const auto decoded = oracle::decode_block_content(canonical_block_content(prev, txs, time), 48);
    ASSERT_EQ(decoded.previous_hash, Bytes(prev.bytes().begin(), prev.bytes().end()));
    ASSERT_EQ(decoded.generation_time, time);
    ASSERT_EQ(decoded.transactions, txs);
  }
}

TEST(CanonicalContent, OversizedLengthRejected) {
  Bytes out;
  EXPECT_NO_THROW(append_length_prefix(out, 0xFFFFFFFFu));
  EXPECT_EQ(out, (Bytes{0xFF, 0xFF, 0xFF, 0xFF}));
  EXPECT_THROW(append_length_prefix(out, std::size_t{1} << 32), InvalidInput);
}

TEST(MineBlock, GenesisAtZeroDifficulty) {
  Chain chain = make_chain(algorithms::sha256, 0);
  const Block& b = append_block(chain, {text("tx")}, 1);
  EXPECT_EQ(b.nonce, 1u);
  EXPECT_EQ(b.previous_hash, Digest::zero(32));
  EXPECT_TRUE(verify_chain(chain).valid);
}

TEST(MineBlock, DeterministicAndLinked) {
  const Chain a = mined_chain(algorithms::sha3_256, 8, 3);
  const Chain b = mined_chain(algorithms::sha3_256, 8, 3);
  ASSERT_EQ(a.blocks, b.blocks);
  EXPECT_EQ(a.blocks[1].previous_hash, a.blocks[0].block_hash);
  EXPECT_EQ(a.blocks[2].previous_hash, a.blocks[1].block_hash);
  const auto r = verify_chain(a);
  EXPECT_TRUE(r.valid) << r.detail;
}

TEST(MakeChain, RejectsImpossibleDifficulty) {
  EXPECT_THROW(make_chain(algorithms::sha1, 161), InvalidInput);
}

TEST(VerifyChain, DetectsTransactionTamper) {
  Chain chain = mined_chain(algorithms::sha256, 8, 3);
  chain.blocks[1].transactions[0][0] ^= 0x01;
  const auto r = verify_chain(chain);
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.failing_index, 1u);
  EXPECT_EQ(r.reason, VerifyFailure::HashMismatch);
}

TEST(VerifyChain, DetectsBrokenLink) {
  Chain chain = mined_chain(algorithms::sha256, 8, 3);
  chain.blocks[2].previous_hash = compute_digest(algorithms::sha256, as_bytes("random"));
  const auto r = verify_chain(chain);
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.failing_index, 2u);
  EXPECT_EQ(r.reason, VerifyFailure::Linkage);
}

TEST(VerifyChain, NonceOutOfRangeAndNotMinimal) {
  Chain chain = mined_chain(algorithms::blake2_256, 8, 1);
  chain.blocks[0].nonce = 0;
  EXPECT_EQ(verify_chain(chain).reason, VerifyFailure::NonceRange);
  chain.blocks[0].nonce = std::uint64_t{1} << 40;
  EXPECT_EQ(verify_chain(chain).reason, VerifyFailure::NonceRange);

  // Extend the PoW chain past the first qualifying digest to the next one.
  Chain original = mined_chain(algorithms::blake2_256, 8, 1);
  Block& b = original.blocks[0];
  Digest h = b.block_hash;
  std::uint64_t n = b.nonce;
  do {
    h = compute_digest(original.alg, h.bytes());
    ++n;
  } while (h.bytes()[0] != 0);
  b.nonce = n;
  b.block_hash = h;
  EXPECT_EQ(verify_chain(original).reason, VerifyFailure::NonceNotMinimal);
}

TEST(VerifyChain, PrefixOfValidChainIsValid) {
  Chain chain = mined_chain(algorithms::sha384, 8, 4);
  while (!chain.blocks.empty()) {
    ASSERT_TRUE(verify_chain(chain).valid);
    chain.blocks.pop_back();
  }
}

TEST(ChainFile, RoundTripAndRejection) {
  const Chain chain = mined_chain(algorithms::sha3_512, 8, 3);
  const Bytes data = serialize_chain(chain);
  ASSERT_EQ(Bytes(data.begin(), data.begin() + 5), text("HPEK1"));
  const Chain back = deserialize_chain(data);
  EXPECT_EQ(back.alg, chain.alg);
  EXPECT_EQ(back.k, chain.k);
  EXPECT_EQ(back.blocks, chain.blocks);

  Bytes tampered = data;
  tampered[tampered.size() - 100] ^= 0x40;
  EXPECT_THROW(deserialize_chain(tampered), InvalidInput);
  EXPECT_THROW(deserialize_chain(Bytes(data.begin(), data.end() - 1)), InvalidInput);
  Bytes trailing = data;
  trailing.push_back(0);
  EXPECT_THROW(deserialize_chain(trailing), InvalidInput);
  EXPECT_THROW(deserialize_chain(text("HPEK2")), InvalidInput);

  const auto path = std::filesystem::temp_directory_path() / "hpek_chain_test.hpek";
  export_chain(chain, path);
  EXPECT_EQ(import_chain(path).blocks, chain.blocks);
  std::filesystem::remove(path);
  EXPECT_THROW(import_chain(path), IoError);
}

}  // namespace
}  // namespace hpek
