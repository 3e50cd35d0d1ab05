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

#include "rgof/edf.hpp"

#include <algorithm>
#include <vector>

#include "rgof/error.hpp"
#include "rgof/sample.hpp"

namespace rgof {
namespace {

std::vector<double> sorted_uniforms(std::span<const double> u) {
  if (u.empty()) throw DomainError("edf statistic: empty sample");
  std::vector<double> s(u.begin(), u.end());
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<double> transform(std::span<const double> x, RayleighParam p) {
  require_positive(x, "edf statistic");
  std::vector<double> u(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) u[i] = rayleigh_cdf(x[i], p);
  return u;
}

}  // namespace

std::string_view edf_name(EdfKind kind) noexcept { return kind == EdfKind::kKs ? "KS" : "CvM"; }

double ks_from_uniforms(std::span<const double> u) {
  const auto s = sorted_uniforms(u);
  const double n = static_cast<double>(s.size());
  double d = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double k = static_cast<double>(i);
    d = std::max({d, (k + 1.0) / n - s[i], s[i] - k / n});
  }
  return d;
}

double cvm_from_uniforms(std::span<const double> u) {
  const auto s = sorted_uniforms(u);
  const double n = static_cast<double>(s.size());
  double w = 1.0 / (12.0 * n);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double e = s[i] - (2.0 * static_cast<double>(i) + 1.0) / (2.0 * n);
    w += e * e;
  }
  return w;
}

EdfStatistic ks_statistic(std::span<const double> x, RayleighParam p) {
  return {EdfKind::kKs, ks_from_uniforms(transform(x, p))};
}

EdfStatistic cvm_statistic(std::span<const double> x, RayleighParam p) {
  return {EdfKind::kCvm, cvm_from_uniforms(transform(x, p))};
}

double edf_fitted(EdfKind kind, std::span<const double> x) {
  const RayleighParam p(estimate_sigma2(x));
  return kind == EdfKind::kKs ? ks_statistic(x, p).value : cvm_statistic(x, p).value;
}

}  // namespace rgof
