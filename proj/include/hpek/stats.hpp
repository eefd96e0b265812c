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
#include <functional>
#include <span>

namespace hpek {

/// First quartile, median and third quartile in ascending order.
///
/// The published tables print the larger value under "1st quartile"; every
/// output of this toolkit uses q1 <= median <= q3 instead.
struct QuartileSummary {
  double q1{0};
  double median{0};
  double q3{0};
  std::size_t n{0};

  friend bool operator==(const QuartileSummary&, const QuartileSummary&) = default;
};

/// Quantile at rank h = (n - 1) * q of the ascending sort, linearly
/// interpolated between floor(h) and ceil(h). Throws InvalidInput on empty input.
double quantile(std::span<const double> samples, double q);

QuartileSummary quartile_summary(std::span<const double> samples);

/// Reference distribution for a Kolmogorov-Smirnov comparison.
///
/// `cdf(x)` is P(X <= x); `cdf_below(x)` is P(X < x). They coincide for
/// continuous laws and differ at the atoms of a discrete one.
class ReferenceDistribution {
 public:
  using Fn = std::function<double(double)>;

  static ReferenceDistribution continuous(Fn cdf);
  /// Law supported on the integers; `cdf` only needs to be exact at integers.
  static ReferenceDistribution integer_lattice(Fn cdf);
  /// Number of Bernoulli(p) trials up to and including the first success (support 1, 2, ...).
  static ReferenceDistribution geometric(double p);

  double cdf(double x) const { return cdf_(x); }
  double cdf_below(double x) const { return below_(x); }

 private:
  ReferenceDistribution(Fn cdf, Fn below) : cdf_(std::move(cdf)), below_(std::move(below)) {}
  Fn cdf_;
  Fn below_;
};

/// sup_x |F_n(x) - F(x)| for the empirical CDF F_n of `samples`.
double empirical_cdf_distance(std::span<const double> samples, const ReferenceDistribution& ref);

}  // namespace hpek
