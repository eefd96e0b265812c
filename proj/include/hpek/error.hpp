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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace hpek {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unsupported algorithm id or otherwise unusable configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Precondition violation on an argument (length mismatch, out-of-range value).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Bad command-line or run configuration; carries the offending token if any.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what, std::string token = {})
      : Error(what), token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Proof-of-work search ran out of iterations before meeting the target.
class Exhausted : public Error {
 public:
  Exhausted(const std::string& what, std::uint64_t iterations,
            std::optional<std::uint64_t> trial = std::nullopt)
      : Error(what), iterations_(iterations), trial_(trial) {}

  std::uint64_t iterations() const noexcept { return iterations_; }
  std::optional<std::uint64_t> trial() const noexcept { return trial_; }

 private:
  std::uint64_t iterations_;
  std::optional<std::uint64_t> trial_;
};

}  // namespace hpek
