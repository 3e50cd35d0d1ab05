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

#include "rgof/censored.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "rgof/departure.hpp"
#include "rgof/error.hpp"
#include "rgof/special.hpp"

namespace rgof {
namespace {

// Observations sorted by time, events first among ties, with IPCW weights.
struct Prepared {
  std::vector<std::size_t> order;  // sorted position -> input index
  std::vector<double> y;
  std::vector<bool> event;
  std::vector<double> w;
  KmCurve km;
};

Prepared prepare(const CensoredSample& data, const char* fn) {
  const std::size_t n = data.size();
  if (n < 2) throw DomainError(std::string(fn) + ": need at least 2 observations");
  if (data.event_count() < 2) throw DomainError(std::string(fn) + ": need at least 2 events");

  Prepared p;
  p.km = km_censoring(data);
  p.order.resize(n);
  std::iota(p.order.begin(), p.order.end(), std::size_t{0});
  std::stable_sort(p.order.begin(), p.order.end(), [&](std::size_t a, std::size_t b) {
    if (data[a].time != data[b].time) return data[a].time < data[b].time;
    return data[a].event && !data[b].event;
  });
  p.y.resize(n);
  p.event.resize(n);
  p.w.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& o = data[p.order[i]];
    p.y[i] = o.time;
    p.event[i] = o.event;
    p.w[i] = ipcw_weight(p.km, o.time, o.event);
  }
  return p;
}

CensoredDeparture departure(const Prepared& p) {
  const std::size_t n = p.y.size();
  // Same accumulation order as compute_delta so that unit weights reproduce
  // it to rounding.
  double suffix_w = std::accumulate(p.w.begin(), p.w.end(), 0.0);
  double min_sq = 0.0;
  double total = 0.0;   // sum w y
  double sum_sq = 0.0;  // sum w y^2
  double sum_w2y2 = 0.0;
  double sum_w = 0.0;
  double sum_w2 = 0.0;
  double ratio = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = p.y[i];
    const double wi = p.w[i];
    const double v2 = v * v;
    suffix_w -= wi;
    min_sq += wi * suffix_w * v2;
    ratio += wi * total / v;
    total += wi * v;
    sum_sq += wi * v2;
    sum_w2y2 += wi * wi * v2;
    sum_w += wi;
    sum_w2 += wi * wi;
  }
  const double cross = 0.5 * (total * total - sum_w2y2);
  const double pairs_w = 0.5 * (sum_w * sum_w - sum_w2);
  const double nn = static_cast<double>(n);
  const double scale = 2.0 / (nn * (nn - 1.0));

  CensoredDeparture d;
  d.delta1c = scale * (min_sq + 0.5 * cross);
  d.delta2c = scale * 0.5 * ratio + scale * pairs_w;
  d.sigma2c = sum_sq / (2.0 * nn);
  if (!(d.sigma2c > 0.0)) throw DomainError("compute_delta_censored: degenerate weights");
  d.delta_c = d.delta1c / d.sigma2c - d.delta2c;
  return d;
}

}  // namespace

CensoredDeparture compute_delta_censored(const CensoredSample& data) {
  return departure(prepare(data, "compute_delta_censored"));
}

ReweightedVariance reweighted_variance(const CensoredSample& data) {
  const Prepared p = prepare(data, "reweighted_variance");
  const CensoredDeparture d = departure(p);
  const std::size_t n = p.y.size();
  const double nn = static_cast<double>(n);
  const double s2 = d.sigma2c;
  const double plugin = d.delta1c / (4.0 * s2 * s2);

  double sum_w = 0.0;
  double sum_wy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum_w += p.w[i];
    sum_wy += p.w[i] * p.y[i];
  }
  // suffix sums over k > i of w_k and w_k / y_k
  std::vector<double> hi_w(n + 1, 0.0);
  std::vector<double> hi_inv(n + 1, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    hi_w[i] = hi_w[i + 1] + p.w[i];
    hi_inv[i] = hi_inv[i + 1] + p.w[i] / p.y[i];
  }

  // a_i = w_i * h1(Y_i), sorted order
  std::vector<double> a(n);
  double lo_sq = 0.0;  // sum_{k <= i} w_k y_k^2
  double lo_y = 0.0;   // sum_{k <= i} w_k y_k
  for (std::size_t i = 0; i < n; ++i) {
    const double x = p.y[i];
    lo_sq += p.w[i] * x * x;
    lo_y += p.w[i] * x;
    const double min_sq = lo_sq + x * x * hi_w[i + 1];
    const double ratio = lo_y / x + x * hi_inv[i + 1];
    const double h1 = ((min_sq + 0.5 * x * sum_wy) / s2 - 0.5 * ratio - sum_w) / nn;
    a[i] = p.w[i] * (h1 - plugin * x * x);
  }

  // Walk groups of tied times. w_hat(u) = mean of a_k over {Y_k > u}.
  // Events at u precede censorings at u, so only the censorings at u are in
  // the censoring risk set there.
  std::vector<double> v(n, 0.0);
  std::vector<double> suffix_a(n + 1, 0.0);
  for (std::size_t i = n; i-- > 0;) suffix_a[i] = suffix_a[i + 1] + a[i];
  double compensator = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t end = i;
    while (end < n && p.y[end] == p.y[i]) ++end;
    std::size_t first_cens = i;
    while (first_cens < end && p.event[first_cens]) ++first_cens;
    const std::size_t n_cens = end - first_cens;

    for (std::size_t k = i; k < first_cens; ++k) v[p.order[k]] = a[k] - compensator;
    if (n_cens > 0) {
      const std::size_t above = n - end;
      const double w_hat = above > 0 ? suffix_a[end] / static_cast<double>(above) : 0.0;
      const double risk = static_cast<double>(above + n_cens);
      compensator += w_hat * static_cast<double>(n_cens) / risk;
      for (std::size_t k = first_cens; k < end; ++k) v[p.order[k]] = a[k] + w_hat - compensator;
    }
    i = end;
  }

  ReweightedVariance out;
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / nn;
  double ss = 0.0;
  for (double vi : v) ss += (vi - mean) * (vi - mean);
  out.sigma2_0c = 4.0 * ss / (nn - 1.0);
  out.v_values = std::move(v);
  return out;
}

TestReport censored_test(const CensoredSample& data, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("censored_test: alpha must lie in (0, 1)");
  const CensoredDeparture d = compute_delta_censored(data);
  const ReweightedVariance var = reweighted_variance(data);
  const double n = static_cast<double>(data.size());
  const double sd = std::sqrt(var.sigma2_0c);
  const double z = sd > 0.0 ? std::sqrt(n) * std::abs(d.delta_c - kNullDelta) / sd
                            : std::numeric_limits<double>::infinity();
  const double threshold = normal_upper_quantile(alpha / 2.0);

  TestReport r;
  r.method = Method::kUstatCensored;
  r.statistic = d.delta_c;
  r.thresholds = {threshold};
  r.p_value = rgof::erfc(z / std::numbers::sqrt2);
  r.reject = z > threshold;
  r.alpha = alpha;
  r.n = data.size();
  r.censored_fraction = data.censored_fraction();
  r.details = {{"z", z},
               {"sigma2_0c", var.sigma2_0c},
               {"delta1c", d.delta1c},
               {"delta2c", d.delta2c},
               {"sigma2c", d.sigma2c}};
  return r;
}

}  // namespace rgof
