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

#include "hpek/reference.hpp"

#include <algorithm>
#include <limits>

#include "hpek/error.hpp"

namespace hpek::reference {

EntropySeries adjacent_entropy_series(const HashChain& chain) {
  const auto& d = chain.digests;
  if (d.size() < 2) throw InvalidInput("adjacent_entropy_series: need at least 2 digests");
  EntropySeries series{chain.alg, EntropyKind::Adjacent, {}, d.size()};
  for (std::size_t i = 1; i < d.size(); ++i) series.values.push_back(pair_entropy(d[i], d[i - 1]));
  return series;
}

EntropySeries min_pairwise_entropy(const HashChain& chain) {
  const auto& d = chain.digests;
  if (d.size() < 2) throw InvalidInput("min_pairwise_entropy: need at least 2 digests");
  EntropySeries series{chain.alg, EntropyKind::MinPairwise, {}, d.size()};
  for (std::size_t i = 0; i < d.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (j != i) best = std::min(best, pair_entropy(d[i], d[j]));
    }
    series.values.push_back(best);
  }
  return series;
}

PowDistribution pow_distribution(const PowConfig& config) {
  if (config.trials == 0) throw InvalidInput("pow: trials must be at least 1");
  const std::uint64_t limit =
      config.max_iterations == 0 ? default_max_iterations(config.k) : config.max_iterations;
  PowDistribution result;
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    const Bytes content = trial_content(config.content_seed, t);
    try {
      auto sample = pow_search(config.alg, content, config.k, limit);
      sample.trial_index = t;
      result.samples.push_back(sample);
    } catch (const Exhausted& e) {
      throw Exhausted(e.what(), e.iterations(), t);
    }
  }
  const auto nonces = nonce_values(result.samples);
  result.summary = quartile_summary(nonces);
  return result;
}

}  // namespace hpek::reference
