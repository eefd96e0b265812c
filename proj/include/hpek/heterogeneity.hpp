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
 * \file hpek/heterogeneity.hpp
 * Bit-difference entropy between digests of an iterated hash chain.
 *
 * For two digests of length L whose XOR has `ones` set bits, the differing-bit
 * probability is p = ones / L and the pair entropy is the binary entropy
 *
 *     E = -[(1 - p) ln(1 - p) + p ln p]      (nats, 0 ln 0 = 0)
 *
 * which peaks at ln 2 when exactly half of the bits differ and falls to zero
 * both for identical digests and for bitwise complements.
 */

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "hpek/hash_suite.hpp"
#include "hpek/parallel.hpp"

namespace hpek {

/// digests[0] = H(seed); digests[i] = H(digests[i-1]).
struct HashChain {
  HashAlgorithmId alg;
  Bytes seed_message;
  std::vector<Digest> digests;
};

enum class EntropyKind : std::uint8_t { Adjacent, MinPairwise };

std::string_view to_string(EntropyKind kind) noexcept;

struct EntropySeries {
  HashAlgorithmId alg;
  EntropyKind kind{EntropyKind::Adjacent};
  std::vector<double> values;
  std::size_t m{0};  ///< number of digests the samples were drawn from
};

inline constexpr std::string_view default_chain_seed = "block-0";

/// ones / L. Throws InvalidInput for L == 0 or ones > L.
double differing_bit_probability(std::size_t ones, std::size_t bit_length);

/// Binary entropy in nats. Throws InvalidInput for p outside [0, 1].
double bit_entropy(double p);

HashChain generate_chain(HashAlgorithmId alg, ByteView seed_message, std::size_t m);

/// Entropy of the XOR difference of two equal-length digests.
double pair_entropy(const Digest& a, const Digest& b);

/// values[i-1] = pair_entropy(digests[i], digests[i-1]) for i = 1..m-1.
EntropySeries adjacent_entropy_series(const HashChain& chain, Parallelism par = {});

/// values[i] = min over j != i of pair_entropy(digests[i], digests[j]).
///
/// Full O(m^2) scan over packed 64-bit words. Each unordered pair is visited
/// once and the extreme Hamming weights per digest are reduced across
/// threads, so the result does not depend on the worker count or schedule.
EntropySeries min_pairwise_entropy(const HashChain& chain, Parallelism par = {});

/// Entropy for every possible weight 0..L, identical to bit_entropy(w / L).
std::vector<double> entropy_table(std::size_t bit_length);

}  // namespace hpek
