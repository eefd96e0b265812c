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

#include "hpek/timing.hpp"

#include <chrono>
#include <fstream>
#include <limits>

#include "hpek/error.hpp"
#include "hpek/parallel.hpp"

namespace hpek {
namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t fold(std::uint64_t acc, const Digest& d) noexcept {
  for (auto b : d.bytes()) acc = (acc ^ b) * 0x100000001b3ULL;
  return acc;
}

}  // namespace

ClockInfo measure_clock_resolution() {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (int i = 0; i < 200; ++i) {
    const auto start = Clock::now();
    auto next = Clock::now();
    while (next == start) next = Clock::now();
    const auto delta = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(next - start).count());
    if (delta > 0 && delta < best) best = delta;
  }
  return {best};
}

Bytes timing_message(std::size_t bytes) {
  Bytes msg(bytes);
  for (std::size_t i = 0; i < bytes; ++i) msg[i] = static_cast<std::uint8_t>(i * 131 + 7);
  return msg;
}

TimingBatch time_digest_batch(HashAlgorithmId alg, ByteView message, std::size_t reps,
                              std::size_t warmup) {
  if (reps == 0) throw InvalidInput("time_digest_batch: reps must be at least 1");
  TimingScope exclusive;
  Hasher hasher(alg);

  TimingBatch batch;
  batch.clock = measure_clock_resolution();
  if (batch.clock.resolution_ns > 1000) {
    batch.warnings.push_back("steady_clock resolution is " +
                             std::to_string(batch.clock.resolution_ns) + " ns (coarser than 1 us)");
  }

  std::uint64_t acc = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < warmup; ++i) acc = fold(acc, hasher.digest(message));

  batch.samples.reserve(reps);
  for (std::size_t i = 0; i < reps; ++i) {
    const auto start = Clock::now();
    const Digest d = hasher.digest(message);
    const auto stop = Clock::now();
    acc = fold(acc, d);
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
    batch.samples.push_back({alg, static_cast<std::uint64_t>(ns < 0 ? 0 : ns), message.size()});
  }
  batch.checksum = acc;
  return batch;
}

QuartileSummary timing_summary(const TimingBatch& batch) {
  std::vector<double> ns;
  ns.reserve(batch.samples.size());
  for (const auto& s : batch.samples) ns.push_back(static_cast<double>(s.nanos));
  return quartile_summary(ns);
}

std::string host_cpu_model() {
  std::ifstream in("/proc/cpuinfo");
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("model name", 0) == 0) {
      auto colon = line.find(':');
      if (colon != std::string::npos) {
        auto value = line.substr(colon + 1);
        value.erase(0, value.find_first_not_of(" \t"));
        return value;
      }
    }
  }
  return "unknown";
}

}  // namespace hpek
