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

#include "rgof/rayleigh.hpp"

#include <cmath>

#include "rgof/error.hpp"

namespace rgof {
namespace {

void require_time(double x, const char* fn) {
  if (!(x >= 0.0)) throw DomainError(std::string(fn) + ": x must be >= 0");
}

}  // namespace

RayleighParam::RayleighParam(double sigma2) : sigma2_(sigma2) {
  if (!(std::isfinite(sigma2) && sigma2 > 0.0)) {
    throw DomainError("RayleighParam: sigma^2 must be positive and finite");
  }
}

double RayleighParam::sigma() const noexcept { return std::sqrt(sigma2_); }

double rayleigh_cdf(double x, RayleighParam p) {
  require_time(x, "rayleigh_cdf");
  return -std::expm1(-x * x / (2.0 * p.sigma2()));
}

double rayleigh_survival(double x, RayleighParam p) {
  require_time(x, "rayleigh_survival");
  return std::exp(-x * x / (2.0 * p.sigma2()));
}

double rayleigh_pdf(double x, RayleighParam p) {
  require_time(x, "rayleigh_pdf");
  return x / p.sigma2() * std::exp(-x * x / (2.0 * p.sigma2()));
}

double rayleigh_quantile(double u, RayleighParam p) {
  if (!(u >= 0.0 && u < 1.0)) throw DomainError("rayleigh_quantile: u must lie in [0, 1)");
  return p.sigma() * std::sqrt(-2.0 * std::log1p(-u));
}

void rayleigh_fill(std::span<double> out, RayleighParam p, Stream& stream) {
  const double scale = p.sigma();
  for (double& v : out) {
    // 1 - u lies in (0, 1], so u == 0 would give exactly 0; redraw to keep
    // the sample strictly positive.
    double u = stream.uniform();
    while (u == 0.0) u = stream.uniform();
    v = scale * std::sqrt(-2.0 * std::log1p(-u));
  }
}

Sample rayleigh_sample(std::size_t n, RayleighParam p, Stream& stream) {
  if (n == 0) throw DomainError("rayleigh_sample: n must be >= 1");
  std::vector<double> values(n);
  rayleigh_fill(values, p, stream);
  return Sample(std::move(values));
}

double estimate_sigma2(std::span<const double> x) {
  if (x.empty()) throw DomainError("estimate_sigma2: empty sample");
  require_positive(x, "estimate_sigma2");
  double sum = 0.0;
  for (double v : x) sum += v * v;
  return sum / (2.0 * static_cast<double>(x.size()));
}

}  // namespace rgof
