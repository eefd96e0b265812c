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

#include "hpek/bitops.hpp"

#include <array>
#include <bit>
#include <cstring>

#include "hpek/error.hpp"

namespace hpek {

BitDifference xor_difference(const Digest& a, const Digest& b) {
  if (a.bit_length() != b.bit_length()) {
    throw InvalidInput("xor_difference: bit length mismatch (" + std::to_string(a.bit_length()) +
                       " vs " + std::to_string(b.bit_length()) + ")");
  }
  std::array<std::uint8_t, Digest::max_bytes> buf{};
  auto x = a.bytes();
  auto y = b.bytes();
  for (std::size_t i = 0; i < x.size(); ++i) buf[i] = x[i] ^ y[i];
  ByteView view{buf.data(), x.size()};
  return {Digest(view), ones_count(view), a.bit_length()};
}

std::size_t ones_count(ByteView bytes) noexcept {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 8 <= bytes.size(); i += 8) {
    std::uint64_t word;
    std::memcpy(&word, bytes.data() + i, sizeof word);
    total += static_cast<std::size_t>(std::popcount(word));
  }
  for (; i < bytes.size(); ++i) total += static_cast<std::size_t>(std::popcount(bytes[i]));
  return total;
}

std::size_t leading_zero_bits(ByteView bytes) noexcept {
  std::size_t zeros = 0;
  for (auto b : bytes) {
    if (b != 0) return zeros + static_cast<std::size_t>(std::countl_zero(b));
    zeros += 8;
  }
  return zeros;
}

std::size_t leading_zero_bits(const Digest& d) noexcept { return leading_zero_bits(d.bytes()); }

}  // namespace hpek
