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

// Serial reference against the OpenMP kernels.
//
//   ./kernel_bench --benchmark_filter=MinPairwise
//
// The thread argument is the worker count handed to the kernel; the reference
// ignores it and is registered once.

#include <benchmark/benchmark.h>

#include <map>

#include "hpek/heterogeneity.hpp"
#include "hpek/pow.hpp"
#include "hpek/reference.hpp"

namespace {

const hpek::HashChain& chain_of(std::size_t m) {
  static std::map<std::size_t, hpek::HashChain> cache;
  auto it = cache.find(m);
  if (it == cache.end()) {
    it = cache.emplace(m, hpek::generate_chain(hpek::algorithms::sha256,
                                               hpek::as_bytes(hpek::default_chain_seed), m))
             .first;
  }
  return it->second;
}

void BM_MinPairwiseReference(benchmark::State& state) {
  const auto& chain = chain_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hpek::reference::min_pairwise_entropy(chain));
  state.SetComplexityN(state.range(0));
}

void BM_MinPairwiseKernel(benchmark::State& state) {
  const auto& chain = chain_of(static_cast<std::size_t>(state.range(0)));
  const hpek::Parallelism par{static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(hpek::min_pairwise_entropy(chain, par));
  state.SetComplexityN(state.range(0));
}

void BM_AdjacentReference(benchmark::State& state) {
  const auto& chain = chain_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hpek::reference::adjacent_entropy_series(chain));
}

void BM_AdjacentKernel(benchmark::State& state) {
  const auto& chain = chain_of(static_cast<std::size_t>(state.range(0)));
  const hpek::Parallelism par{static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(hpek::adjacent_entropy_series(chain, par));
}

hpek::PowConfig pow_config(std::int64_t trials) {
  hpek::PowConfig cfg;
  cfg.alg = hpek::algorithms::sha256;
  cfg.trials = static_cast<std::uint64_t>(trials);
  return cfg;
}

void BM_PowReference(benchmark::State& state) {
  const auto cfg = pow_config(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hpek::reference::pow_distribution(cfg));
}

void BM_PowKernel(benchmark::State& state) {
  const auto cfg = pow_config(state.range(0));
  const hpek::Parallelism par{static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(hpek::pow_distribution(cfg, par));
}

}  // namespace

BENCHMARK(BM_MinPairwiseReference)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_MinPairwiseKernel)
    ->ArgsProduct({{512, 2048, 8192}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_AdjacentReference)->Arg(32768)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_AdjacentKernel)->ArgsProduct({{32768}, {1, 2, 4}})->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_PowReference)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PowKernel)->ArgsProduct({{1024}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
