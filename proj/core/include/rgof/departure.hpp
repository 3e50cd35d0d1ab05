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

#include <span>

#include "rgof/alternatives.hpp"

namespace rgof {

/// Probability limit of delta_hat under any Rayleigh model. The statistic
/// weights E min(X1, X2)^2 by 1/sigma^2 rather than 1/(2 sigma^2), so under
/// H0 it converges to 1/2 instead of 0; decisions built on a normal or
/// chi-square limit are centred here.
inline constexpr double kNullDelta = 0.5;

/// (1/2)(2 min(x1, x2)^2 + x1 x2). Both arguments must be positive.
double kernel_h1(double x1, double x2);

/// (1/2) min(x1, x2) / max(x1, x2). A tied pair contributes 1/2, the value
/// taken by the order-statistic form of the statistic.
double kernel_h2(double x1, double x2);

struct DepartureEstimate {
  double delta_hat = 0.0;   // u1 / sigma2_hat - u2 - 1
  double u1 = 0.0;          // U-statistic over kernel_h1
  double u2 = 0.0;          // U-statistic over kernel_h2
  double sigma2_hat = 0.0;  // (1/2n) sum x_i^2
};

/// Complete-data statistic via order statistics: O(n log n) for the sort,
/// O(n) for the sums. Needs n >= 2 positive observations.
DepartureEstimate compute_delta(std::span<const double> x);

/// The functional delta_hat converges to under `dist`:
///   (E min^2 + E X1 X2 I(X2 < X1)) / sigma^2 - E (X2/X1) I(X2 < X1) - 1,
/// with sigma^2 = E X^2 / 2. Equals kNullDelta for every Rayleigh model.
/// Nested adaptive quadrature; throws DomainError if E X^2 diverges.
double population_delta(const AlternativeSpec& dist);

/// The characterization gap: the integral over t of
///   E[(X^2 - sigma^2)/(X sigma^2) min(X, t)] - F(t)
/// against dF(t), which vanishes exactly when F is Rayleigh. Differs from
/// population_delta by E min(X1, X2)^2 / (2 sigma^2).
double population_departure(const AlternativeSpec& dist);

/// Integrand of the closed-form null variance,
///   (1/4)(8 - 6 exp(-x^2 / 2s^2) - sqrt(2 pi)(s^2 - x^2) erf(x / (sqrt2 s)) / (s x))^2,
/// with its removable singularity at x = 0 handled by series.
double null_variance_integrand(double x, double s = 1.0);

/// E[null_variance_integrand(X)] - 9 for X ~ Rayleigh(s), by adaptive
/// quadrature. This is the limiting variance of sqrt(n)(U1/sigma^2 - U2)
/// with sigma^2 known; it does not depend on s.
double null_variance_sigma0_sq(double s = 1.0);

/// Var of the first-order projection of U1/sigma^2 - U2 under `dist`, with
/// sigma^2 = E X^2 / 2 held fixed. Agrees with null_variance_sigma0_sq for
/// Rayleigh models.
double asymptotic_variance(const AlternativeSpec& dist);

/// Limiting variance of sqrt(n)(delta_hat - population_delta) when sigma^2
/// is estimated by sigma2_hat: the projection above minus
/// theta1 X^2 / (2 sigma^4), theta1 = E min^2 + mu^2 / 2. About 0.526 under
/// H0.
double plugin_asymptotic_variance(const AlternativeSpec& dist);

}  // namespace rgof
