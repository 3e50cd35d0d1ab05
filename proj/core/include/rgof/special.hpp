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

namespace rgof {

/// Error function, absolute error below 1e-15 on the whole real line
/// (Maclaurin series for |x| < 3, Lentz continued fraction for erfc beyond).
double erf(double x) noexcept;

/// Complementary error function with the same approximation scheme.
double erfc(double x) noexcept;

/// Upper `p` point of the standard normal: P(Z > z) = p. Requires 0 < p < 1.
double normal_upper_quantile(double p);

/// Upper `p` point of chi-square with `df` degrees of freedom, through the
/// inverse regularized upper incomplete gamma function.
double chi_square_upper_quantile(double df, double p);

/// Sample quantile with linear interpolation between order statistics
/// (Hyndman-Fan type 7, the R default). `sorted` must be ascending and
/// nonempty; 0 <= p <= 1.
double quantile_type7(std::span<const double> sorted, double p);

}  // namespace rgof
