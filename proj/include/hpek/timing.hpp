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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hpek/hash_suite.hpp"
#include "hpek/stats.hpp"

namespace hpek {

struct TimingSample {
  HashAlgorithmId alg;
  std::uint64_t nanos{0};
  std::size_t message_bytes{0};
};

struct ClockInfo {
  std::uint64_t resolution_ns{0};  ///< smallest observed nonzero tick of steady_clock
};

struct TimingBatch {
  std::vector<TimingSample> samples;
  std::uint64_t checksum{0};  ///< folded digest bytes; keeps the calls observable
  ClockInfo clock;
  std::vector<std::string> warnings;
};

inline constexpr std::size_t default_timing_message_bytes = 32;
inline constexpr std::size_t default_warmup = 1000;

/// Smallest nonzero difference between consecutive steady_clock readings.
ClockInfo measure_clock_resolution();

/// `warmup` unmeasured digests, then `reps` individually timed digests of
/// `message`. Runs on the calling thread only and refuses to start while a
/// parallel kernel is active.
TimingBatch time_digest_batch(HashAlgorithmId alg, ByteView message, std::size_t reps,
                              std::size_t warmup = default_warmup);

/// Deterministic filler message of the given length.
Bytes timing_message(std::size_t bytes);

QuartileSummary timing_summary(const TimingBatch& batch);

/// "model name" from /proc/cpuinfo, or "unknown".
std::string host_cpu_model();

}  // namespace hpek
