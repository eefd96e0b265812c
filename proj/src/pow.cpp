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

#include "hpek/pow.hpp"

#include <omp.h>

#include <limits>
#include <optional>

#include "hpek/bitops.hpp"
#include "hpek/error.hpp"

namespace hpek {
namespace {

void validate(HashAlgorithmId alg, unsigned k, std::uint64_t max_iterations) {
  if (!alg.is_valid()) throw ConfigError("pow: unsupported hash algorithm");
  if (k > alg.output_bits) {
    throw InvalidInput("pow: k = " + std::to_string(k) + " exceeds digest length " +
                       std::to_string(alg.output_bits));
  }
  if (max_iterations == 0) throw InvalidInput("pow: max_iterations must be at least 1");
}

std::optional<NonceSample> search(Hasher& hasher, ByteView content, unsigned k,
                                  std::uint64_t max_iterations) {
  Digest h = hasher.digest(content);
  for (std::uint64_t n = 1;; ++n) {
    if (leading_zero_bits(h) >= k) return NonceSample{0, n, h};
    if (n == max_iterations) return std::nullopt;
    h = hasher.digest(h.bytes());
  }
}

}  // namespace

std::uint64_t default_max_iterations(unsigned k) noexcept {
  if (k + 8 >= 64) return std::numeric_limits<std::uint64_t>::max();
  return std::uint64_t{1} << (k + 8);
}

Bytes trial_content(ByteView content_seed, std::uint64_t trial) {
  Bytes content(content_seed.begin(), content_seed.end());
  for (int shift = 56; shift >= 0; shift -= 8) {
    content.push_back(static_cast<std::uint8_t>(trial >> shift));
  }
  return content;
}

NonceSample pow_search(HashAlgorithmId alg, ByteView content, unsigned k,
                       std::uint64_t max_iterations) {
  validate(alg, k, max_iterations);
  Hasher hasher(alg);
  auto found = search(hasher, content, k, max_iterations);
  if (!found) {
    throw Exhausted("pow: no digest with " + std::to_string(k) + " leading zero bits within " +
                        std::to_string(max_iterations) + " iterations",
                    max_iterations);
  }
  return *found;
}

PowDistribution pow_distribution(const PowConfig& config, Parallelism par) {
  const std::uint64_t limit =
      config.max_iterations == 0 ? default_max_iterations(config.k) : config.max_iterations;
  validate(config.alg, config.k, limit);
  if (config.trials == 0) throw InvalidInput("pow: trials must be at least 1");

  KernelScope scope;
  std::vector<std::optional<NonceSample>> found(config.trials);
  const auto trials = static_cast<std::int64_t>(config.trials);

#pragma omp parallel num_threads(resolve_threads(par))
  {
    Hasher hasher(config.alg);
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t t = 0; t < trials; ++t) {
      const auto trial = static_cast<std::uint64_t>(t);
      const Bytes content = trial_content(config.content_seed, trial);
      auto sample = search(hasher, content, config.k, limit);
      if (sample) sample->trial_index = trial;
      found[trial] = std::move(sample);
    }
  }

  PowDistribution result;
  result.samples.reserve(config.trials);
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    if (!found[t]) {
      throw Exhausted("pow: trial " + std::to_string(t) + " found no qualifying digest within " +
                          std::to_string(limit) + " iterations",
                      limit, t);
    }
    result.samples.push_back(*found[t]);
  }
  const auto nonces = nonce_values(result.samples);
  result.summary = quartile_summary(nonces);
  return result;
}

std::vector<double> nonce_values(const std::vector<NonceSample>& samples) {
  std::vector<double> values;
  values.reserve(samples.size());
  for (const auto& s : samples) values.push_back(static_cast<double>(s.nonce));
  return values;
}

}  // namespace hpek
