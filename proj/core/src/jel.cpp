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

#include "rgof/jel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rgof/departure.hpp"
#include "rgof/error.hpp"
#include "rgof/sample.hpp"
#include "rgof/special.hpp"

namespace rgof {
namespace {

constexpr double kPoleShrink = 1e-12;
constexpr double kResidualTol = 1e-10;

// Kernel g(a, b) = min^2 + ab/2 - (1/2) min/max summed over unordered pairs,
// plus per-observation row sums r_k = sum_{j != k} g(x_k, x_j) in sorted
// order.
struct PairSums {
  double total = 0.0;
  std::vector<double> rows;
};

PairSums pair_sums(std::span<const double> sorted) {
  const std::size_t n = sorted.size();
  PairSums out;
  out.rows.resize(n);
  std::vector<double> hi_inv(n + 1, 0.0);
  for (std::size_t i = n; i-- > 0;) hi_inv[i] = hi_inv[i + 1] + 1.0 / sorted[i];
  const double sum = std::accumulate(sorted.begin(), sorted.end(), 0.0);

  double lo_sq = 0.0;
  double lo = 0.0;
  double min_sq = 0.0;
  double ratio = 0.0;
  double sum_sq = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double v = sorted[k];
    const double v2 = v * v;
    const double after = static_cast<double>(n - 1 - k);
    out.rows[k] = lo_sq + after * v2 + 0.5 * v * (sum - v) - 0.5 * (lo / v + v * hi_inv[k + 1]);
    min_sq += after * v2;
    ratio += lo / v;
    lo_sq += v2;
    lo += v;
    sum_sq += v2;
  }
  out.total = min_sq + 0.25 * (sum * sum - sum_sq) - 0.5 * ratio;
  return out;
}

double residual(std::span<const double> nu, double lambda) {
  double g = 0.0;
  for (double v : nu) g += v / (1.0 + lambda * v);
  return g / static_cast<double>(nu.size());
}

}  // namespace

double delta_s(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n < 2) throw DomainError("delta_s: need at least 2 observations");
  require_positive(x, "delta_s");
  std::vector<double> s(x.begin(), x.end());
  std::sort(s.begin(), s.end());
  const double nn = static_cast<double>(n);
  return 2.0 / (nn * (nn - 1.0)) * pair_sums(s).total - 1.0;
}

std::vector<double> jackknife_pseudovalues(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n < 3) throw DomainError("jackknife_pseudovalues: need at least 3 observations");
  require_positive(x, "jackknife_pseudovalues");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> sorted(n);
  for (std::size_t i = 0; i < n; ++i) sorted[i] = x[order[i]];

  const PairSums sums = pair_sums(sorted);
  const double nn = static_cast<double>(n);
  const double full = 2.0 / (nn * (nn - 1.0)) * sums.total - 1.0;
  std::vector<double> nu(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double loo = 2.0 / ((nn - 1.0) * (nn - 2.0)) * (sums.total - sums.rows[k]) - 1.0;
    nu[order[k]] = nn * full - (nn - 1.0) * loo;
  }
  return nu;
}

double solve_lambda(std::span<const double> nu) {
  if (nu.empty()) throw NoSolutionError("solve_lambda: no pseudo-values");
  const auto [mn, mx] = std::minmax_element(nu.begin(), nu.end());
  if (!(*mn < 0.0 && *mx > 0.0)) {
    throw NoSolutionError("solve_lambda: zero lies outside the convex hull of the pseudo-values");
  }
  const double lower_pole = -1.0 / *mx;
  const double upper_pole = -1.0 / *mn;
  const double width = upper_pole - lower_pole;
  // g is decreasing on (lower_pole, upper_pole): positive near the lower pole.
  double lo = lower_pole + kPoleShrink * width;
  double hi = upper_pole - kPoleShrink * width;
  const double nn = static_cast<double>(nu.size());

  double lambda = 0.0;
  for (int iter = 0; iter < 500; ++iter) {
    double g = 0.0;
    double dg = 0.0;
    for (double v : nu) {
      const double d = 1.0 / (1.0 + lambda * v);
      g += v * d;
      dg -= v * v * d * d;
    }
    g /= nn;
    dg /= nn;
    if (std::abs(g) <= 1e-14 * (1.0 + std::abs(*mx - *mn))) break;
    if (g > 0.0) {
      lo = lambda;
    } else {
      hi = lambda;
    }
    double next = dg < 0.0 ? lambda - g / dg : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == lambda || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(lambda)) break;
    lambda = next;
  }
  if (std::abs(residual(nu, lambda)) > kResidualTol) {
    throw NoSolutionError("solve_lambda: did not converge");
  }
  return lambda;
}

JelResult jel_test(std::span<const double> x, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("jel_test: alpha must lie in (0, 1)");
  JelResult r;
  r.delta_s = delta_s(x);
  r.pseudo_values = jackknife_pseudovalues(x);
  r.threshold = chi_square_upper_quantile(1.0, alpha);

  std::vector<double> centred(r.pseudo_values);
  for (double& v : centred) v -= kNullDelta;
  try {
    r.lambda = solve_lambda(centred);
    double sum = 0.0;
    for (double v : centred) sum += std::log1p(r.lambda * v);
    r.minus2logR = std::max(0.0, 2.0 * sum);
  } catch (const NoSolutionError&) {
    r.no_solution = true;
    r.lambda = std::numeric_limits<double>::quiet_NaN();
    r.minus2logR = std::numeric_limits<double>::infinity();
  }
  r.reject = r.minus2logR > r.threshold;
  return r;
}

TestReport to_report(const JelResult& result, double alpha, std::size_t n) {
  TestReport r;
  r.method = Method::kJel;
  r.statistic = result.minus2logR;
  r.thresholds = {result.threshold};
  if (!result.no_solution) {
    // P(chi2_1 > s) = erfc(sqrt(s / 2))
    r.p_value = rgof::erfc(std::sqrt(0.5 * result.minus2logR));
  } else {
    r.p_value = 0.0;
  }
  r.reject = result.reject;
  r.alpha = alpha;
  r.n = n;
  r.details = {{"delta_s", result.delta_s}};
  if (!result.no_solution) r.details["lambda"] = result.lambda;
  return r;
}

}  // namespace rgof
