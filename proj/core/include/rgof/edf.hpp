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
#include <string_view>

#include "rgof/rayleigh.hpp"

namespace rgof {

enum class EdfKind { kKs, kCvm };

std::string_view edf_name(EdfKind kind) noexcept;

struct EdfStatistic {
  EdfKind kind = EdfKind::kKs;
  double value = 0.0;
};

/// D_n = max_i max(i/n - U_(i), U_(i) - (i-1)/n), U_(i) = F(X_(i); p).
EdfStatistic ks_statistic(std::span<const double> x, RayleighParam p);

/// W^2 = 1/(12n) + sum_i (U_(i) - (2i-1)/(2n))^2.
EdfStatistic cvm_statistic(std::span<const double> x, RayleighParam p);

/// Same statistics computed directly from probability-integral transforms
/// U_i in [0, 1]; any order.
double ks_from_uniforms(std::span<const double> u);
double cvm_from_uniforms(std::span<const double> u);

/// Statistic against the Rayleigh fitted by estimate_sigma2(x).
double edf_fitted(EdfKind kind, std::span<const double> x);

}  // namespace rgof
