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

#include "hpek/heterogeneity.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <limits>

#include "hpek/bitops.hpp"
#include "hpek/error.hpp"

namespace hpek {
namespace {

constexpr std::size_t max_words = Digest::max_bytes / 8;

/// Digests copied into W zero-padded 64-bit words each, row-major.
std::vector<std::uint64_t> pack(const std::vector<Digest>& digests, std::size_t words) {
  std::vector<std::uint64_t> packed(digests.size() * words, 0);
  for (std::size_t i = 0; i < digests.size(); ++i) {
    auto bytes = digests[i].bytes();
    std::memcpy(packed.data() + i * words, bytes.data(), bytes.size());
  }
  return packed;
}

template <std::size_t W>
inline unsigned weight(const std::uint64_t* a, const std::uint64_t* b) noexcept {
  unsigned w = 0;
  for (std::size_t k = 0; k < W; ++k) w += static_cast<unsigned>(std::popcount(a[k] ^ b[k]));
  return w;
}

// Per digest, the smallest and largest XOR weight against every other digest.
template <std::size_t W>
void extreme_weights(const std::vector<std::uint64_t>& packed, std::size_t m, int threads,
                     std::vector<std::uint16_t>& lo, std::vector<std::uint16_t>& hi) {
  const auto t_count = static_cast<std::size_t>(threads);
  std::vector<std::uint16_t> local_lo(t_count * m, std::numeric_limits<std::uint16_t>::max());
  std::vector<std::uint16_t> local_hi(t_count * m, 0);
  const std::uint64_t* base = packed.data();
  const auto n = static_cast<std::int64_t>(m);

#pragma omp parallel num_threads(threads)
  {
    const auto t = static_cast<std::size_t>(omp_get_thread_num());
    std::uint16_t* my_lo = local_lo.data() + t * m;
    std::uint16_t* my_hi = local_hi.data() + t * m;

#pragma omp for schedule(dynamic, 32)
    for (std::int64_t ii = 0; ii < n; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      const std::uint64_t* a = base + i * W;
      std::uint16_t i_lo = my_lo[i];
      std::uint16_t i_hi = my_hi[i];
      for (std::size_t j = i + 1; j < m; ++j) {
        const auto w = static_cast<std::uint16_t>(weight<W>(a, base + j * W));
        i_lo = std::min(i_lo, w);
        i_hi = std::max(i_hi, w);
        my_lo[j] = std::min(my_lo[j], w);
        my_hi[j] = std::max(my_hi[j], w);
      }
      my_lo[i] = i_lo;
      my_hi[i] = i_hi;
    }
  }

  lo.assign(local_lo.begin(), local_lo.begin() + static_cast<std::ptrdiff_t>(m));
  hi.assign(local_hi.begin(), local_hi.begin() + static_cast<std::ptrdiff_t>(m));
  for (std::size_t t = 1; t < t_count; ++t) {
    for (std::size_t i = 0; i < m; ++i) {
      lo[i] = std::min(lo[i], local_lo[t * m + i]);
      hi[i] = std::max(hi[i], local_hi[t * m + i]);
    }
  }
}

template <std::size_t W>
void adjacent_weights(const std::vector<std::uint64_t>& packed, std::size_t m, int threads,
                      std::vector<std::uint16_t>& out) {
  out.assign(m - 1, 0);
  const std::uint64_t* base = packed.data();
  const auto n = static_cast<std::int64_t>(m);
#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::int64_t i = 1; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    out[u - 1] = static_cast<std::uint16_t>(weight<W>(base + u * W, base + (u - 1) * W));
  }
}

template <template <std::size_t> class Fn, class... Args>
void dispatch_words(std::size_t words, Args&&... args) {
  switch (words) {
    case 1: return Fn<1>::run(std::forward<Args>(args)...);
    case 2: return Fn<2>::run(std::forward<Args>(args)...);
    case 3: return Fn<3>::run(std::forward<Args>(args)...);
    case 4: return Fn<4>::run(std::forward<Args>(args)...);
    case 5: return Fn<5>::run(std::forward<Args>(args)...);
    case 6: return Fn<6>::run(std::forward<Args>(args)...);
    case 7: return Fn<7>::run(std::forward<Args>(args)...);
    case 8: return Fn<8>::run(std::forward<Args>(args)...);
  }
  throw InvalidInput("digest wider than " + std::to_string(max_words) + " words");
}

template <std::size_t W>
struct ExtremeWeights {
  template <class... Args>
  static void run(Args&&... args) { extreme_weights<W>(std::forward<Args>(args)...); }
};

template <std::size_t W>
struct AdjacentWeights {
  template <class... Args>
  static void run(Args&&... args) { adjacent_weights<W>(std::forward<Args>(args)...); }
};

std::size_t check_chain(const HashChain& chain, const char* who) {
  if (chain.digests.size() < 2) {
    throw InvalidInput(std::string(who) + ": need at least 2 digests, got " +
                       std::to_string(chain.digests.size()));
  }
  const std::size_t bits = chain.digests.front().bit_length();
  for (const auto& d : chain.digests) {
    if (d.bit_length() != bits) throw InvalidInput(std::string(who) + ": mixed digest lengths");
  }
  return bits;
}

}  // namespace

std::string_view to_string(EntropyKind kind) noexcept {
  return kind == EntropyKind::Adjacent ? "adjacent" : "min-pairwise";
}

double differing_bit_probability(std::size_t ones, std::size_t bit_length) {
  if (bit_length == 0) throw InvalidInput("differing_bit_probability: L must be positive");
  if (ones > bit_length) {
    throw InvalidInput("differing_bit_probability: ones (" + std::to_string(ones) +
                       ") exceeds L (" + std::to_string(bit_length) + ")");
  }
  return static_cast<double>(ones) / static_cast<double>(bit_length);
}

double bit_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("bit_entropy: p outside [0, 1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  const double q = 1.0 - p;
  return -(q * std::log(q) + p * std::log(p));
}

std::vector<double> entropy_table(std::size_t bit_length) {
  std::vector<double> table(bit_length + 1);
  for (std::size_t w = 0; w <= bit_length; ++w) {
    table[w] = bit_entropy(differing_bit_probability(w, bit_length));
  }
  return table;
}

HashChain generate_chain(HashAlgorithmId alg, ByteView seed_message, std::size_t m) {
  if (m == 0) throw InvalidInput("generate_chain: m must be at least 1");
  Hasher hasher(alg);
  HashChain chain{alg, Bytes(seed_message.begin(), seed_message.end()), {}};
  chain.digests.reserve(m);
  chain.digests.push_back(hasher.digest(seed_message));
  for (std::size_t i = 1; i < m; ++i) {
    chain.digests.push_back(hasher.digest(chain.digests.back().bytes()));
  }
  return chain;
}

double pair_entropy(const Digest& a, const Digest& b) {
  const auto diff = xor_difference(a, b);
  return bit_entropy(differing_bit_probability(diff.ones, diff.bit_length));
}

EntropySeries adjacent_entropy_series(const HashChain& chain, Parallelism par) {
  const std::size_t bits = check_chain(chain, "adjacent_entropy_series");
  const std::size_t m = chain.digests.size();
  const std::size_t words = (chain.digests.front().byte_length() + 7) / 8;
  const auto table = entropy_table(bits);
  const auto packed = pack(chain.digests, words);

  KernelScope scope;
  std::vector<std::uint16_t> weights;
  dispatch_words<AdjacentWeights>(words, packed, m, resolve_threads(par), weights);

  EntropySeries series{chain.alg, EntropyKind::Adjacent, {}, m};
  series.values.reserve(weights.size());
  for (auto w : weights) series.values.push_back(table[w]);
  return series;
}

EntropySeries min_pairwise_entropy(const HashChain& chain, Parallelism par) {
  const std::size_t bits = check_chain(chain, "min_pairwise_entropy");
  const std::size_t m = chain.digests.size();
  const std::size_t words = (chain.digests.front().byte_length() + 7) / 8;
  const auto table = entropy_table(bits);
  const auto packed = pack(chain.digests, words);

  KernelScope scope;
  std::vector<std::uint16_t> lo, hi;
  dispatch_words<ExtremeWeights>(words, packed, m, resolve_threads(par), lo, hi);

  // The binary entropy is unimodal in the weight, so over any set of weights
  // its minimum sits at the smallest or the largest member.
  EntropySeries series{chain.alg, EntropyKind::MinPairwise, {}, m};
  series.values.reserve(m);
  for (std::size_t i = 0; i < m; ++i) series.values.push_back(std::min(table[lo[i]], table[hi[i]]));
  return series;
}

}  // namespace hpek
