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

#include <cmath>
#include <random>

#include "hpek/bitops.hpp"
#include "hpek/error.hpp"
#include "hpek/heterogeneity.hpp"
#include "hpek/reference.hpp"
#include "oracle/oracles.hpp"

namespace hpek {
namespace {

const double kLn2 = std::log(2.0);

Digest complement(const Digest& d) {
  std::vector<std::uint8_t> bytes(d.bytes().begin(), d.bytes().end());
  for (auto& b : bytes) b = static_cast<std::uint8_t>(~b);
  return Digest(bytes);
}

TEST(DifferingBitProbability, ExactDivision) {
  EXPECT_EQ(differing_bit_probability(128, 256), 0.5);
  EXPECT_EQ(differing_bit_probability(0, 256), 0.0);
  EXPECT_EQ(differing_bit_probability(177, 256), 0.69140625);
  EXPECT_THROW(differing_bit_probability(0, 0), InvalidInput);
  EXPECT_THROW(differing_bit_probability(257, 256), InvalidInput);
}

TEST(BitEntropy, KnownValues) {
  EXPECT_NEAR(bit_entropy(0.5), 0.693147180559945309, 1e-12);
  EXPECT_EQ(bit_entropy(0.0), 0.0);
  EXPECT_EQ(bit_entropy(1.0), 0.0);
  // mpmath, 30 digits: 0.562335144618808350288...
  EXPECT_NEAR(bit_entropy(0.25), 0.562335144618808350, 1e-12);
  EXPECT_THROW(bit_entropy(-0.01), InvalidInput);
  EXPECT_THROW(bit_entropy(1.01), InvalidInput);
  EXPECT_THROW(bit_entropy(std::nan("")), InvalidInput);
}

TEST(BitEntropy, TableIsUnimodalAndPeaksAtHalf) {
  for (std::size_t bits : {8u, 160u, 224u, 256u, 384u, 512u}) {
    const auto t = entropy_table(bits);
    for (std::size_t w = 0; w < bits / 2; ++w) ASSERT_LE(t[w], t[w + 1]) << bits << " " << w;
    for (std::size_t w = bits / 2; w < bits; ++w) ASSERT_GE(t[w], t[w + 1]) << bits << " " << w;
    for (std::size_t w = 0; w <= bits; ++w) {
      ASSERT_GE(t[w], 0.0);
      ASSERT_LE(t[w], kLn2);
      ASSERT_EQ(t[w] == kLn2, w == bits / 2) << bits << " " << w;
      ASSERT_NEAR(t[w], oracle::entropy_nats(w, bits), 1e-15);
    }
  }
}

TEST(GenerateChain, RecurrenceAndDeterminism) {
  const auto seed = as_bytes("block-0");
  const auto one = generate_chain(algorithms::sha256, seed, 1);
  ASSERT_EQ(one.digests.size(), 1u);
  EXPECT_EQ(one.digests[0], compute_digest(algorithms::sha256, seed));

  for (auto alg : list_algorithms()) {
    const auto a = generate_chain(alg, seed, 5);
    const auto b = generate_chain(alg, seed, 5);
    ASSERT_EQ(a.digests, b.digests);
    EXPECT_EQ(a.digests[2], compute_digest(alg, a.digests[1].bytes()));
    for (const auto& d : a.digests) EXPECT_EQ(d.bit_length(), alg.output_bits);
  }
  EXPECT_THROW(generate_chain(algorithms::sha256, seed, 0), InvalidInput);
}

TEST(PairEntropy, DegenerateAndBalancedCases) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const Digest x(oracle::pseudorandom_message(rng(), 32));
    EXPECT_EQ(pair_entropy(x, x), 0.0);
    EXPECT_EQ(pair_entropy(x, complement(x)), 0.0);
  }
  const Digest zeros = Digest::zero(32);
  const Digest half = Digest::from_hex(std::string(32, 'f') + std::string(32, '0'));
  EXPECT_EQ(pair_entropy(zeros, half), kLn2);
  EXPECT_THROW(pair_entropy(Digest::zero(20), Digest::zero(32)), InvalidInput);
}

TEST(PairEntropy, SymmetricOnRandomPairs) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 1000; ++i) {
    const Digest a(oracle::pseudorandom_message(rng(), 48));
    const Digest b(oracle::pseudorandom_message(rng(), 48));
    ASSERT_EQ(pair_entropy(a, b), pair_entropy(b, a));
  }
}

TEST(AdjacentSeries, TwoEqualDigests) {
  const Digest x = compute_digest(algorithms::sha1, as_bytes("x"));
  const HashChain chain{algorithms::sha1, {}, {x, x}};
  const auto s = adjacent_entropy_series(chain);
  ASSERT_EQ(s.values.size(), 1u);
  EXPECT_EQ(s.values[0], 0.0);
  EXPECT_EQ(s.kind, EntropyKind::Adjacent);
}

TEST(MinPairwise, TwoDigestsShareTheirPair) {
  const auto chain = generate_chain(algorithms::sha3_224, as_bytes("pair"), 2);
  const auto s = min_pairwise_entropy(chain);
  ASSERT_EQ(s.values.size(), 2u);
  const double e = pair_entropy(chain.digests[0], chain.digests[1]);
  EXPECT_EQ(s.values[0], e);
  EXPECT_EQ(s.values[1], e);
}

TEST(EntropySeries, RejectShortChains) {
  const HashChain single = generate_chain(algorithms::sha256, as_bytes("s"), 1);
  EXPECT_THROW(adjacent_entropy_series(single), InvalidInput);
  EXPECT_THROW(min_pairwise_entropy(single), InvalidInput);
  EXPECT_THROW(reference::min_pairwise_entropy(single), InvalidInput);
}

// The OpenMP kernels must agree bit-for-bit with the literal serial scan for
// every digest width and any thread count.
TEST(Kernels, MatchSerialReferenceForAllAlgorithms) {
  for (auto alg : list_algorithms()) {
    SCOPED_TRACE(to_string(alg));
    const auto chain = generate_chain(alg, as_bytes("kernel-check"), 300);
    const auto ref_adj = reference::adjacent_entropy_series(chain);
    const auto ref_min = reference::min_pairwise_entropy(chain);
    ASSERT_EQ(ref_adj.values.size(), 299u);
    ASSERT_EQ(ref_min.values.size(), 300u);
    for (int threads : {1, 2, 3, 8}) {
      EXPECT_EQ(adjacent_entropy_series(chain, {threads}).values, ref_adj.values);
      EXPECT_EQ(min_pairwise_entropy(chain, {threads}).values, ref_min.values);
    }
  }
}

TEST(Kernels, SyntheticDigestsWithRepeatsAndComplements) {
  std::mt19937_64 rng(17);
  std::vector<Digest> ds;
  for (int i = 0; i < 120; ++i) ds.emplace_back(oracle::pseudorandom_message(rng(), 20));
  ds.push_back(ds[3]);
  ds.push_back(complement(ds[10]));
  ds.push_back(Digest::zero(20));
  const HashChain chain{algorithms::sha1, {}, ds};
  const auto ref = reference::min_pairwise_entropy(chain);
  EXPECT_EQ(min_pairwise_entropy(chain, {4}).values, ref.values);
  EXPECT_EQ(ref.values[3], 0.0);
  EXPECT_EQ(ref.values[10], 0.0);
}

TEST(EntropyProperties, RangeAndDominance) {
  const auto chain = generate_chain(algorithms::blake2_256, as_bytes("props"), 2000);
  const auto adj = adjacent_entropy_series(chain);
  const auto mins = min_pairwise_entropy(chain);
  for (double v : adj.values) {
    ASSERT_GE(v, 0.0);
    ASSERT_LE(v, kLn2);
  }
  for (std::size_t i = 0; i < mins.values.size(); ++i) {
    ASSERT_GE(mins.values[i], 0.0);
    if (i > 0) ASSERT_LE(mins.values[i], adj.values[i - 1]);
    if (i + 1 < mins.values.size()) ASSERT_LE(mins.values[i], adj.values[i]);
  }
}

}  // namespace
}  // namespace hpek
