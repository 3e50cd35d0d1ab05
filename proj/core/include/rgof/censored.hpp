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

#include <vector>

#include "rgof/kaplan_meier.hpp"
#include "rgof/report.hpp"
#include "rgof/sample.hpp"

namespace rgof {

/// IPCW estimate of the departure from right-censored data.
///
///   delta1c = 1/(n(n-1)) sum_{i != j} k1(Y_i, Y_j) w_i w_j,  k1 = (1/2)(2 min^2 + ab)
///   delta2c = 1/(n(n-1)) sum_{i != j} k2(Y_i, Y_j) w_i w_j,  k2 = (1/2) min/max + 1
///   sigma2c = (1/2n) sum Y_i^2 w_i
///   delta_c = delta1c / sigma2c - delta2c
///
/// with w_i = delta_i / K_c(Y_i-). With no censoring every weight is 1 and
/// delta_c reduces to compute_delta().delta_hat.
struct CensoredDeparture {
  double delta_c = 0.0;
  double delta1c = 0.0;
  double delta2c = 0.0;
  double sigma2c = 0.0;
};

/// Needs n >= 2 and at least 2 events. O(n log n).
CensoredDeparture compute_delta_censored(const CensoredSample& data);

/// Reweighted (influence-function) variance estimate for delta_c:
///   V_i = h1(Y_i) w_i + w_hat(Y_i)(1 - delta_i) - sum_{u <= Y_i} w_hat(u) dLambda_c(u)
///   sigma2_0c = 4/(n-1) sum (V_i - mean V)^2
/// where h1(x) = (1/n) sum_k w_k h(x, Y_k) is the estimated projection of
/// the centred kernel h = k1 / sigma2c - k2, corrected for the estimation
/// of sigma2c by -delta1c x^2 / (4 sigma2c^2); w_hat(t) averages
/// h1(Y_k) w_k over {Y_k > t} (zero past the last observation) and
/// dLambda_c is the Nelson-Aalen censoring hazard increment.
struct ReweightedVariance {
  std::vector<double> v_values;  // V_i, input order
  double sigma2_0c = 0.0;
};

ReweightedVariance reweighted_variance(const CensoredSample& data);

/// Normal-approximation test: z = sqrt(n) |delta_c - kNullDelta| / sigma_0c,
/// reject when z exceeds the upper alpha/2 normal point. 0 < alpha < 1.
TestReport censored_test(const CensoredSample& data, double alpha);

}  // namespace rgof
