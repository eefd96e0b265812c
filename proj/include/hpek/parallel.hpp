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

namespace hpek {

/// Worker-count request for the OpenMP kernels. 0 means "let OpenMP decide".
struct Parallelism {
  int threads{0};
};

/// Concrete thread count for a request (always >= 1).
int resolve_threads(Parallelism p) noexcept;

/// Parallelism from the HPEK_THREADS environment variable (unset, empty or 0 = auto).
Parallelism parallelism_from_env();

/// Process-wide guard that keeps parallel kernels and timing measurements apart.
///
/// Kernels hold a KernelScope while running; a TimingScope refuses to open
/// while any kernel is active and blocks new kernels until it closes.
class KernelScope {
 public:
  KernelScope();
  ~KernelScope();
  KernelScope(const KernelScope&) = delete;
  KernelScope& operator=(const KernelScope&) = delete;
};

class TimingScope {
 public:
  TimingScope();
  ~TimingScope();
  TimingScope(const TimingScope&) = delete;
  TimingScope& operator=(const TimingScope&) = delete;
};

}  // namespace hpek
