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

// Slow, direct reference implementations. Each one follows the defining
// formula literally so that the fast paths in the library can be checked
// against something with no shared code.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "rgof/sample.hpp"

namespace rgof::oracle {

inline double h1(double a, double b) {
  const double m = std::min(a, b);
  return 0.5 * (2.0 * m * m + a * b);
}

inline double h2(double a, double b) { return 0.5 * std::min(a, b) / std::max(a, b); }

// U1 / sigma2_hat - U2 - 1 over all unordered pairs.
inline double delta_hat(const std::vector<double>& x) {
  const std::size_t n = x.size();
  double u1 = 0.0;
  double u2 = 0.0;
  double sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sq += x[i] * x[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      u1 += h1(x[i], x[j]);
      u2 += h2(x[i], x[j]);
    }
  }
  const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  return (u1 / pairs) / (sq / (2.0 * static_cast<double>(n))) - u2 / pairs - 1.0;
}

// U1 - U2 - 1 with sigma = 1.
inline double delta_s(const std::vector<double>& x) {
  const std::size_t n = x.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += h1(x[i], x[j]) - h2(x[i], x[j]);
  return s / (0.5 * static_cast<double>(n) * static_cast<double>(n - 1)) - 1.0;
}

// Product-limit estimate of the censoring survival K(t) (censorings are the
// events). At a shared time lifetimes leave the risk set first.
inline double km_censoring(const std::vector<Observation>& obs, double t) {
  std::vector<double> times;
  for (const auto& o : obs)
    if (!o.event && o.time <= t) times.push_back(o.time);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  double k = 1.0;
  for (double u : times) {
    double at_risk = 0.0;
    double d = 0.0;
    for (const auto& o : obs) {
      if (o.time > u || (o.time == u && !o.event)) at_risk += 1.0;
      if (o.time == u && !o.event) d += 1.0;
    }
    k *= 1.0 - d / at_risk;
  }
  return k;
}

// K(t-): product over censoring times strictly below t.
inline double km_censoring_left(const std::vector<Observation>& obs, double t) {
  double best = 1.0;
  double below = -1.0;
  for (const auto& o : obs)
    if (!o.event && o.time < t && o.time > below) below = o.time;
  if (below >= 0.0) best = km_censoring(obs, below);
  return best;
}

// IPCW estimator written as plain double sums over i != j.
inline double delta_censored(const std::vector<Observation>& obs) {
  const std::size_t n = obs.size();
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = obs[i].event ? 1.0 / km_censoring_left(obs, obs[i].time) : 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double s2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s2 += obs[i].time * obs[i].time * w[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      d1 += h1(obs[i].time, obs[j].time) * w[i] * w[j];
      d2 += (h2(obs[i].time, obs[j].time) + 1.0) * w[i] * w[j];
    }
  }
  const double nn = static_cast<double>(n);
  d1 /= nn * (nn - 1.0);
  d2 /= nn * (nn - 1.0);
  s2 /= 2.0 * nn;
  return d1 / s2 - d2;
}

// Root of sum nu / (1 + lambda nu) = 0 by plain bisection.
inline double lambda_bisect(const std::vector<double>& nu) {
  const double mx = *std::max_element(nu.begin(), nu.end());
  const double mn = *std::min_element(nu.begin(), nu.end());
  double lo = -1.0 / mx;
  double hi = -1.0 / mn;
  const double eps = 1e-13 * (hi - lo);
  lo += eps;
  hi -= eps;
  for (int i = 0; i < 400; ++i) {
    const double mid = 0.5 * (lo + hi);
    double g = 0.0;
    for (double v : nu) g += v / (1.0 + mid * v);
    (g > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace rgof::oracle
