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
#include <vector>

#include "rgof/report.hpp"

namespace rgof {

/// Departure statistic for the standard Rayleigh null (sigma = 1):
///   U1 - U2 - 1
///     = 2/(n(n-1)) sum_i (n-i) X_(i)^2
///       + 1/(n(n-1)) sum_{j<i} X_(j)(X_(i) - 1/X_(i)) - 1.
/// Unbiased for kNullDelta under the standard Rayleigh. Needs n >= 2.
double delta_s(std::span<const double> x);

/// nu_k = n delta_s(x) - (n-1) delta_s(x without x_k), in input order.
/// Leave-one-out values come from per-observation row sums of the kernel, so
/// the whole vector costs O(n log n). Needs n >= 3.
std::vector<double> jackknife_pseudovalues(std::span<const double> x);

/// Root of (1/n) sum nu_i / (1 + lambda nu_i) = 0 on the interval where every
/// 1 + lambda nu_i > 0 (shrunk by a relative 1e-12 from the poles).
/// Safeguarded Newton; |residual| <= 1e-10 on return. Throws NoSolutionError
/// unless min(nu) < 0 < max(nu).
double solve_lambda(std::span<const double> nu);

struct JelResult {
  double delta_s = 0.0;
  std::vector<double> pseudo_values;  // nu_k
  double lambda = 0.0;
  double minus2logR = 0.0;  // +inf when the constraint has no solution
  bool no_solution = false;
  double threshold = 0.0;  // upper alpha point of chi-square(1)
  bool reject = false;
};

/// Jackknife empirical likelihood ratio test of E nu = kNullDelta:
/// -2 log R = 2 sum log(1 + lambda (nu_i - kNullDelta)), rejected when it
/// exceeds the chi-square(1) upper alpha point. Needs n >= 3, 0 < alpha < 1.
JelResult jel_test(std::span<const double> x, double alpha);

TestReport to_report(const JelResult& result, double alpha, std::size_t n);

}  // namespace rgof
