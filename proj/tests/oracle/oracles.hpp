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

// Test-only oracles. Nothing here calls into the library's bit, entropy or
// statistics code; each helper recomputes its quantity the slow, obvious way.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace hpek::oracle {

/// splitmix64 stream, emitted as little-endian 64-bit words.
inline std::vector<std::uint8_t> pseudorandom_message(std::uint64_t seed, std::size_t n) {
  std::vector<std::uint8_t> out;
  out.reserve(n + 8);
  std::uint64_t s = seed;
  while (out.size() < n) {
    s += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(z >> (8 * i)));
  }
  out.resize(n);
  return out;
}

inline std::size_t naive_ones(const std::vector<std::uint8_t>& bytes) {
  std::size_t n = 0;
  for (auto b : bytes) {
    for (int bit = 0; bit < 8; ++bit) n += (b >> bit) & 1u;
  }
  return n;
}

/// Bit i of the digest in MSB-first, byte-0-first order.
inline bool bit_at(const std::vector<std::uint8_t>& bytes, std::size_t i) {
  return (bytes[i / 8] >> (7 - i % 8)) & 1u;
}

inline std::size_t naive_leading_zeros(const std::vector<std::uint8_t>& bytes) {
  std::size_t i = 0;
  while (i < bytes.size() * 8 && !bit_at(bytes, i)) ++i;
  return i;
}

inline double entropy_nats(std::size_t ones, std::size_t bits) {
  const double p = static_cast<double>(ones) / static_cast<double>(bits);
  double h = 0.0;
  if (p > 0.0) h -= p * std::log(p);
  if (p < 1.0) h -= (1.0 - p) * std::log(1.0 - p);
  return h;
}

inline double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

/// Monte-Carlo model of an ideal hash: the XOR of two independent uniform
/// L-bit strings has Binomial(L, 1/2) ones.
class BinomialModel {
 public:
  BinomialModel(std::size_t bits, std::uint64_t seed) : bits_(bits), rng_(seed) {
    if (bits % 2 != 0) throw std::invalid_argument("even L only");
  }

  /// Median adjacent entropy over m - 1 independent pairs.
  double adjacent_median(std::size_t m) {
    std::binomial_distribution<int> ones(static_cast<int>(bits_), 0.5);
    std::vector<double> e;
    e.reserve(m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) e.push_back(entropy_nats(static_cast<std::size_t>(ones(rng_)), bits_));
    return median_of(std::move(e));
  }

  /// Median over m digests of the minimum entropy against m - 1 others.
  ///
  /// The minimum sits at the largest deviation D = max |X_j - L/2| of m - 1
  /// Binomial draws, sampled exactly by inverting P(D <= d) = P(|X - L/2| <= d)^(m-1).
  double min_pairwise_median(std::size_t m) {
    const std::size_t half = bits_ / 2;
    std::vector<double> pmf(bits_ + 1);
    for (std::size_t x = 0; x <= bits_; ++x) {
      pmf[x] = std::exp(std::lgamma(bits_ + 1.0) - std::lgamma(x + 1.0) - std::lgamma(bits_ - x + 1.0) -
                        static_cast<double>(bits_) * std::log(2.0));
    }
    std::vector<double> cdf_dev(half + 1);
    double inside = 0.0;
    for (std::size_t d = 0; d <= half; ++d) {
      inside += d == 0 ? pmf[half] : pmf[half - d] + pmf[half + d];
      cdf_dev[d] = std::pow(std::min(inside, 1.0), static_cast<double>(m - 1));
    }
    cdf_dev[half] = 1.0;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> e;
    e.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      const double draw = u(rng_);
      std::size_t d = 0;
      while (cdf_dev[d] < draw) ++d;
      e.push_back(entropy_nats(half + d, bits_));
    }
    return median_of(std::move(e));
  }

 private:
  std::size_t bits_;
  std::mt19937_64 rng_;
};

/// Inverse-transform draws from Geometric(p) on {1, 2, ...}.
inline std::vector<double> geometric_draws(double p, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = 1.0 - u(rng);  // (0, 1]
    out.push_back(std::max(1.0, std::ceil(std::log(v) / std::log1p(-p))));
  }
  return out;
}

/// Geometric quantile ceil(ln(1 - q) / ln(1 - p)).
inline double geometric_quantile(double p, double q) {
  return std::ceil(std::log1p(-q) / std::log1p(-p));
}

struct DecodedBlockContent {
  std::vector<std::uint8_t> previous_hash;
  std::int64_t generation_time{0};
  std::vector<std::vector<std::uint8_t>> transactions;
};

/// Independent decoder for the canonical block encoding.
inline DecodedBlockContent decode_block_content(const std::vector<std::uint8_t>& in, std::size_t hash_bytes) {
  std::size_t pos = 0;
  auto need = [&](std::size_t n) {
    if (in.size() - pos < n) throw std::runtime_error("truncated");
  };
  auto be = [&](int n) {
    need(static_cast<std::size_t>(n));
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) v = (v << 8) | in[pos++];
    return v;
  };
  DecodedBlockContent out;
  need(hash_bytes);
  out.previous_hash.assign(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(hash_bytes));
  pos = hash_bytes;
  out.generation_time = static_cast<std::int64_t>(be(8));
  const auto count = be(4);
  for (std::uint64_t t = 0; t < count; ++t) {
    const auto len = static_cast<std::size_t>(be(4));
    need(len);
    out.transactions.emplace_back(in.begin() + static_cast<std::ptrdiff_t>(pos),
                                  in.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
  }
  if (pos != in.size()) throw std::runtime_error("trailing bytes");
  return out;
}

}  // namespace hpek::oracle
