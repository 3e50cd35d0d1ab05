// Copyright 2026 The rayleigh-gof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rgof/special.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/distributions/normal.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "rgof/error.hpp"

namespace rgof {
namespace {

constexpr double kTwoOverSqrtPi = 2.0 * std::numbers::inv_sqrtpi;

// erf(x) = 2/sqrt(pi) * sum_k (-1)^k x^(2k+1) / (k! (2k+1)).
// At |x| = 3 the largest term is ~2e3, so cancellation costs about 3 digits.
double erf_series(double x) noexcept {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int k = 1; k < 200; ++k) {
    term *= -x2 / k;
    const double add = term / (2 * k + 1);
    sum += add;
    if (std::abs(add) < 1e-17 * std::abs(sum)) break;
  }
  return kTwoOverSqrtPi * sum;
}

// erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))),
// evaluated by modified Lentz for x >= 3.
double erfc_continued_fraction(double x) noexcept {
  constexpr double tiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int k = 1; k < 500; ++k) {
    const double a = 0.5 * k;
    d = x + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = x + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x * x) * std::numbers::inv_sqrtpi / f;
}

}  // namespace

double erf(double x) noexcept {
  if (std::isnan(x)) return x;
  if (std::abs(x) < 3.0) return erf_series(x);
  const double tail = erfc_continued_fraction(std::abs(x));
  return x > 0 ? 1.0 - tail : tail - 1.0;
}

double erfc(double x) noexcept {
  if (std::isnan(x)) return x;
  if (x >= 3.0) return erfc_continued_fraction(x);
  if (x <= -3.0) return 2.0 - erfc_continued_fraction(-x);
  return 1.0 - erf_series(x);
}

double normal_upper_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("normal_upper_quantile: p must lie in (0, 1)");
  return boost::math::quantile(boost::math::complement(boost::math::normal_distribution<double>{}, p));
}

double chi_square_upper_quantile(double df, double p) {
  if (!(df > 0.0)) throw DomainError("chi_square_upper_quantile: df must be positive");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("chi_square_upper_quantile: p must lie in (0, 1)");
  // Q(df/2, x/2) = p.
  return 2.0 * boost::math::gamma_q_inv(0.5 * df, p);
}

double quantile_type7(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw DomainError("quantile_type7: empty input");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("quantile_type7: p must lie in [0, 1]");
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace rgof
