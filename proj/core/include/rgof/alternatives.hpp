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

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "rgof/random.hpp"
#include "rgof/sample.hpp"

namespace rgof {

enum class Family {
  kWeibull,          // shape k, scale 1
  kGamma,            // shape a, rate b
  kLognormal,        // meanlog mu, sdlog s
  kPareto,           // scale x_m, shape alpha; support [x_m, inf)
  kHalfNormal,       // theta |Z|
  kExponential,      // rate
  kInverseGaussian,  // mean mu, shape lambda
  kRayleigh,         // sigma^2
};

/// A lifetime distribution used as the data-generating model in power
/// studies. Parameters are validated on construction.
class AlternativeSpec {
 public:
  /// Throws ConfigError on wrong arity or nonpositive parameters.
  AlternativeSpec(Family family, std::span<const double> params);
  AlternativeSpec(Family family, std::initializer_list<double> params)
      : AlternativeSpec(family, std::span<const double>(params.begin(), params.size())) {}

  /// Parses `family:p1[,p2]`, e.g. `weibull:1.5`, `gamma:3,1`,
  /// `inverse-gaussian:2,1`. Throws ConfigError naming the valid families.
  static AlternativeSpec parse(std::string_view text);

  Family family() const noexcept { return family_; }
  std::size_t arity() const noexcept { return arity_; }
  double param(std::size_t i) const noexcept { return params_[i]; }

  /// Canonical `family:p1[,p2]` form accepted by parse().
  std::string to_string() const;
  /// Short label such as "Weibull(1.5)".
  std::string label() const;

  /// Left end of the support (x_m for Pareto, 0 otherwise).
  double support_lower() const noexcept;
  double pdf(double x) const;
  double survival(double x) const;
  /// E(X^2); +inf when it diverges (Pareto with alpha <= 2).
  double second_moment() const;

  double draw(Stream& stream) const;

  friend bool operator==(const AlternativeSpec&, const AlternativeSpec&) = default;

 private:
  Family family_;
  std::size_t arity_ = 0;
  std::array<double, 2> params_{};
};

std::string_view family_name(Family family) noexcept;
/// All accepted family names, comma separated, for usage messages.
std::string valid_family_names();

/// n independent draws from `spec`.
Sample sample_alternative(const AlternativeSpec& spec, std::size_t n, Stream& stream);
void fill_alternative(std::span<double> out, const AlternativeSpec& spec, Stream& stream);

/// Exponential censoring with rate `rate_b`; `target_fraction` records the
/// intended P(T > C) when the rate was calibrated (0 if set by hand).
struct CensoringSpec {
  double rate_b = 0.0;
  double target_fraction = 0.0;

  /// Throws ConfigError unless rate_b > 0 and 0 <= target_fraction < 1.
  void validate() const;
};

/// Solves integral_0^inf S(c) b exp(-b c) dc = target for the exponential
/// censoring rate b, i.e. P(T > C) = target. `survival` must decrease from
/// 1 to 0. Throws CalibrationError if no bracket is found.
double calibrate_censoring_rate(const std::function<double(double)>& survival, double target);

/// P(T > C) for C ~ Exp(rate_b), by quadrature.
double censoring_probability(const std::function<double(double)>& survival, double rate_b);

/// Calibrated CensoringSpec for lifetimes following `spec`.
CensoringSpec calibrate_censoring(const AlternativeSpec& spec, double target);

/// n pairs (min(X, C), X <= C) with X ~ spec, C ~ Exp(cens.rate_b).
CensoredSample sample_censored(const AlternativeSpec& spec, const CensoringSpec& cens,
                               std::size_t n, Stream& stream);

}  // namespace rgof
