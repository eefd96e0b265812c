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

// Serial, unoptimised implementations of the parallel kernels. They follow the
// definitions literally (one pair_entropy call per ordered pair, one search per
// trial in order) and exist so tests and benchmarks have something to compare
// the OpenMP kernels against.

#include "hpek/heterogeneity.hpp"
#include "hpek/pow.hpp"

namespace hpek::reference {

EntropySeries adjacent_entropy_series(const HashChain& chain);

/// O(m^2) ordered-pair scan; use only for small m.
EntropySeries min_pairwise_entropy(const HashChain& chain);

PowDistribution pow_distribution(const PowConfig& config);

}  // namespace hpek::reference
