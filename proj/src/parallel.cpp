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

#include "hpek/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <string_view>

#include "hpek/error.hpp"

namespace hpek {
namespace {

std::atomic<int> active_kernels{0};
std::atomic<bool> timing_active{false};

}  // namespace

int resolve_threads(Parallelism p) noexcept {
  if (p.threads > 0) return p.threads;
  return omp_get_max_threads() > 0 ? omp_get_max_threads() : 1;
}

Parallelism parallelism_from_env() {
  const char* raw = std::getenv("HPEK_THREADS");
  if (raw == nullptr || *raw == '\0') return {};
  std::string_view text(raw);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0) {
    throw UsageError("HPEK_THREADS must be a non-negative integer, got '" + std::string(text) + "'",
                     std::string(text));
  }
  return {value};
}

KernelScope::KernelScope() {
  if (timing_active.load()) {
    throw ConfigError("parallel kernel requested while a timing measurement is running");
  }
  ++active_kernels;
}

KernelScope::~KernelScope() { --active_kernels; }

TimingScope::TimingScope() {
  bool expected = false;
  if (!timing_active.compare_exchange_strong(expected, true)) {
    throw ConfigError("timing measurements cannot run concurrently");
  }
  if (active_kernels.load() != 0) {
    timing_active = false;
    throw ConfigError("timing cannot start while parallel kernels are running");
  }
}

TimingScope::~TimingScope() { timing_active = false; }

}  // namespace hpek
