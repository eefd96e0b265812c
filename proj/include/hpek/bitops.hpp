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

#include "hpek/hash_suite.hpp"

namespace hpek {

/// XOR of two equal-length digests together with its Hamming weight.
struct BitDifference {
  Digest xor_bytes;
  std::size_t ones{0};
  std::size_t bit_length{0};
};

/// Byte-wise XOR. Throws InvalidInput when the bit lengths differ.
BitDifference xor_difference(const Digest& a, const Digest& b);

/// Hamming weight of an arbitrary byte string.
std::size_t ones_count(ByteView bytes) noexcept;

/// Zero bits before the first set bit, scanning byte 0 first and MSB-first
/// within each byte. Returns bit_length() for an all-zero digest.
std::size_t leading_zero_bits(const Digest& d) noexcept;
std::size_t leading_zero_bits(ByteView bytes) noexcept;

}  // namespace hpek
