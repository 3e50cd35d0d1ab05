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

#pragma once

#include <cstddef>
#include <span>

#include "rgof/random.hpp"
#include "rgof/sample.hpp"

namespace rgof {

/// Rayleigh model parameterized by the squared scale sigma^2, which is what
/// every statistic in this library consumes.
class RayleighParam {
 public:
  /// Throws DomainError unless sigma2 is positive and finite.
  explicit RayleighParam(double sigma2);

  static RayleighParam standard() { return RayleighParam(1.0); }

  double sigma2() const noexcept { return sigma2_; }
  double sigma() const noexcept;

  friend bool operator==(const RayleighParam&, const RayleighParam&) = default;

 private:
  double sigma2_;
};

/// 1 - exp(-x^2 / (2 sigma^2)); x >= 0.
double rayleigh_cdf(double x, RayleighParam p);
/// exp(-x^2 / (2 sigma^2)); x >= 0.
double rayleigh_survival(double x, RayleighParam p);
/// (x / sigma^2) exp(-x^2 / (2 sigma^2)); x >= 0.
double rayleigh_pdf(double x, RayleighParam p);
/// sigma * sqrt(-2 log(1 - u)); 0 <= u < 1.
double rayleigh_quantile(double u, RayleighParam p);

/// n draws by inversion, one uniform per variate.
Sample rayleigh_sample(std::size_t n, RayleighParam p, Stream& stream);
/// In-place variant used by the simulation loops; overwrites `out`.
void rayleigh_fill(std::span<double> out, RayleighParam p, Stream& stream);

/// Unbiased moment estimator (1 / 2n) sum x_i^2 of sigma^2.
double estimate_sigma2(std::span<const double> x);

}  // namespace rgof
