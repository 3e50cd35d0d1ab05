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

#include "rgof/sample.hpp"

namespace rgof {

/// Right-continuous step function produced by the product-limit estimator.
/// Immutable after construction; safe for concurrent reads.
class KmCurve {
 public:
  KmCurve() = default;
  /// `times` strictly increasing and positive; `values` the survival level
  /// from each time onwards, nonincreasing in [0, 1].
  KmCurve(std::vector<double> times, std::vector<double> values);

  /// S(t), right-continuous; 1 before the first jump.
  double operator()(double t) const noexcept;
  /// S(t-), the left limit.
  double left_limit(double t) const noexcept;

  std::span<const double> jump_times() const noexcept { return times_; }
  std::span<const double> survival_values() const noexcept { return values_; }

 private:
  std::vector<double> times_;
  std::vector<double> values_;
};

/// Kaplan-Meier estimator of the censoring survival function K_c, treating
/// delta = 0 as the event. At tied times lifetime events are ordered before
/// censorings, so the risk set for a censoring at u is #{Y > u} plus the
/// censorings at u.
KmCurve km_censoring(const CensoredSample& data);

/// Ordinary Kaplan-Meier estimator of the lifetime survival function
/// (risk set #{Y >= u}).
KmCurve km_lifetime(const CensoredSample& data);

/// delta / K_c(y-); zero for censored observations. Throws
/// DegenerateWeightError when delta = 1 and K_c(y-) = 0.
double ipcw_weight(const KmCurve& censoring, double y, bool delta);

/// ipcw_weight for every observation, in input order.
std::vector<double> ipcw_weights(const CensoredSample& data, const KmCurve& censoring);

}  // namespace rgof
