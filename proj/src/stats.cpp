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

#include "hpek/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hpek/error.hpp"

namespace hpek {
namespace {

double sorted_quantile(const std::vector<double>& sorted, double q) {
  const double h = static_cast<double>(sorted.size() - 1) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = static_cast<std::size_t>(std::ceil(h));
  if (lo == hi) return sorted[lo];
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

std::vector<double> sorted_copy(std::span<const double> samples, const char* who) {
  if (samples.empty()) throw InvalidInput(std::string(who) + ": empty sample set");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

}  // namespace

double quantile(std::span<const double> samples, double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw InvalidInput("quantile: q outside [0, 1]");
  return sorted_quantile(sorted_copy(samples, "quantile"), q);
}

QuartileSummary quartile_summary(std::span<const double> samples) {
  auto sorted = sorted_copy(samples, "quartile_summary");
  return {sorted_quantile(sorted, 0.25), sorted_quantile(sorted, 0.5),
          sorted_quantile(sorted, 0.75), sorted.size()};
}

ReferenceDistribution ReferenceDistribution::continuous(Fn cdf) {
  Fn below = cdf;
  return {std::move(cdf), std::move(below)};
}

ReferenceDistribution ReferenceDistribution::integer_lattice(Fn cdf) {
  Fn below = [cdf](double x) { return cdf(std::ceil(x) - 1.0); };
  return {std::move(cdf), std::move(below)};
}

ReferenceDistribution ReferenceDistribution::geometric(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw InvalidInput("geometric: p outside (0, 1]");
  const double log_fail = std::log1p(-p);
  return integer_lattice([p, log_fail](double x) {
    const double k = std::floor(x);
    if (k < 1.0) return 0.0;
    if (p == 1.0) return 1.0;
    return -std::expm1(k * log_fail);
  });
}

double empirical_cdf_distance(std::span<const double> samples, const ReferenceDistribution& ref) {
  auto sorted = sorted_copy(samples, "empirical_cdf_distance");
  const double n = static_cast<double>(sorted.size());
  double worst = 0.0;
  double below = 0.0;  // F_n just left of the current value
  std::size_t i = 0;
  while (i < sorted.size()) {
    const double x = sorted[i];
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == x) ++j;
    const double at = static_cast<double>(j) / n;
    // On [prev, x) F_n == below while F climbs to cdf_below(x); at x both jump.
    worst = std::max(worst, std::abs(ref.cdf_below(x) - below));
    worst = std::max(worst, std::abs(ref.cdf(x) - at));
    below = at;
    i = j;
  }
  return worst;
}

}  // namespace hpek
