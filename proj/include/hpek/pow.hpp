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
 * \file hpek/pow.hpp
 * Proof-of-work by iterated hashing.
 *
 * Starting from block content c the search computes h_1 = H(c) and
 * h_i = H(h_{i-1}); the nonce is the smallest n >= 1 for which the first k
 * bits of h_n are zero. For an ideal hash n ~ Geometric(2^-k).
 */

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hpek/hash_suite.hpp"
#include "hpek/parallel.hpp"
#include "hpek/stats.hpp"

namespace hpek {

struct PowConfig {
  HashAlgorithmId alg{algorithms::sha256};
  unsigned k{8};
  std::uint64_t max_iterations{0};  ///< 0 selects default_max_iterations(k)
  std::uint64_t trials{32768};
  Bytes content_seed{};
};

struct NonceSample {
  std::uint64_t trial_index{0};
  std::uint64_t nonce{0};
  Digest qualifying_digest;
};

struct PowDistribution {
  std::vector<NonceSample> samples;  ///< ordered by trial_index
  QuartileSummary summary;
};

/// 2^(k+8), saturating at 2^64 - 1.
std::uint64_t default_max_iterations(unsigned k) noexcept;

/// content_seed || trial index as 8 big-endian bytes.
Bytes trial_content(ByteView content_seed, std::uint64_t trial);

/// Throws InvalidInput for k > L or max_iterations == 0 and Exhausted when
/// no digest qualifies within max_iterations.
NonceSample pow_search(HashAlgorithmId alg, ByteView content, unsigned k,
                       std::uint64_t max_iterations);

/// Runs config.trials independent searches in parallel. On exhaustion the
/// error names the lowest failing trial.
PowDistribution pow_distribution(const PowConfig& config, Parallelism par = {});

/// Nonces as doubles, in trial order.
std::vector<double> nonce_values(const std::vector<NonceSample>& samples);

}  // namespace hpek
