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

#include "rgof/departure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "rgof/error.hpp"
#include "rgof/rayleigh.hpp"
#include "rgof/special.hpp"

namespace rgof {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class F>
double integrate(F f, double a, double b, double tol = 1e-11, unsigned depth = 15) {
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 21>::integrate(f, a, b, depth, tol, &error);
}

// Partial moments are evaluated inside outer integrals; a shallow recursion
// keeps the nested cost bounded.
constexpr double kInnerTol = 1e-10;
constexpr unsigned kInnerDepth = 8;

void require_pair(double x1, double x2, const char* fn) {
  if (!(x1 > 0.0 && x2 > 0.0)) throw DomainError(std::string(fn) + ": arguments must be positive");
}

// Partial moments of a lifetime distribution, evaluated by quadrature.
class Moments {
 public:
  explicit Moments(const AlternativeSpec& dist) : dist_(dist), lo_(dist.support_lower()) {
    second_ = dist.second_moment();
    if (!std::isfinite(second_)) {
      throw DomainError(dist.label() + ": E X^2 diverges, the departure functional is undefined");
    }
    sigma2_ = 0.5 * second_;
    mean_ = integrate([&](double y) { return y * dist_.pdf(y); }, lo_, kInf);
  }

  double sigma2() const { return sigma2_; }
  double mean() const { return mean_; }

  // int_lo^x y f(y) dy
  double lower_first(double x) const {
    if (x <= lo_) return 0.0;
    return integrate([&](double y) { return y * dist_.pdf(y); }, lo_, x, kInnerTol, kInnerDepth);
  }
  // int_lo^x y^2 f(y) dy
  double lower_second(double x) const {
    if (x <= lo_) return 0.0;
    return integrate([&](double y) { return y * y * dist_.pdf(y); }, lo_, x, kInnerTol, kInnerDepth);
  }
  // int_x^inf f(y) / y dy. Below the mean the integral runs in log y, where
  // the 1/y singularity at 0 disappears.
  double upper_reciprocal(double x) const {
    const double a = std::max(x, lo_);
    if (a <= 0.0) return kInf;
    const double tail = integrate([&](double y) { return dist_.pdf(y) / y; }, std::max(a, mean_), kInf,
                                kInnerTol, kInnerDepth);
    if (a >= mean_) return tail;
    return tail + integrate([&](double t) { return dist_.pdf(std::exp(t)); }, std::log(a), std::log(mean_), kInnerTol,
                            kInnerDepth);
  }

  // int_lo^inf g(x) dx, split at the mean; the head is integrated in
  // log(x - lo) so that x log x type behaviour at lo stays cheap.
  template <class G>
  double split_integral(G g, double tol) const {
    const double width = mean_ - lo_;
    const double head = integrate(
        [&](double t) {
          const double d = std::exp(t);
          return g(lo_ + d) * d;
        },
        std::log(width * 1e-15), std::log(width), tol);
    return head + integrate(g, mean_, kInf, tol);
  }

  // E min(X1, X2)^2
  double min_square() const {
    return integrate([&](double x) { return 2.0 * x * x * dist_.survival(x) * dist_.pdf(x); }, lo_, kInf);
  }
  // E min(X1, X2) / max(X1, X2)
  double min_over_max() const {
    return integrate([&](double x) { return 2.0 * dist_.pdf(x) * lower_first(x) / x; }, lo_, kInf);
  }

  // Projection E[2 h(x, X2)] of the known-scale kernel
  //   h = (1/2)(2 min^2 + x1 x2) / sigma^2 - (1/2) min / max.
  double projection(double x) const {
    const double s2 = sigma2_;
    return (2.0 * x * x * dist_.survival(x) + 2.0 * lower_second(x) + x * mean_) / s2 -
           (x > 0.0 ? x * upper_reciprocal(x) + lower_first(x) / x : 0.0);
  }

  // Var(phi(X)) by quadrature against f.
  template <class Phi>
  double variance(Phi phi) const {
    const double m1 = split_integral([&](double x) { return phi(x) * dist_.pdf(x); }, 1e-9);
    return split_integral(
        [&](double x) {
          const double v = phi(x) - m1;
          return v * v * dist_.pdf(x);
        },
        1e-9);
  }

  const AlternativeSpec& dist() const { return dist_; }

 private:
  const AlternativeSpec& dist_;
  double lo_;
  double second_ = 0.0;
  double sigma2_ = 0.0;
  double mean_ = 0.0;
};

// erf(u) / u, finite at u = 0.
double erf_over(double u) {
  if (std::abs(u) < 1e-5) return 2.0 * std::numbers::inv_sqrtpi * (1.0 - u * u / 3.0);
  return rgof::erf(u) / u;
}

}  // namespace

double kernel_h1(double x1, double x2) {
  require_pair(x1, x2, "kernel_h1");
  const double m = std::min(x1, x2);
  return 0.5 * (2.0 * m * m + x1 * x2);
}

double kernel_h2(double x1, double x2) {
  require_pair(x1, x2, "kernel_h2");
  return 0.5 * std::min(x1, x2) / std::max(x1, x2);
}

DepartureEstimate compute_delta(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n < 2) throw DomainError("compute_delta: need at least 2 observations");
  require_positive(x, "compute_delta");

  std::vector<double> s(x.begin(), x.end());
  std::sort(s.begin(), s.end());

  // min_sq = sum_{i<j} min^2 = sum_i (n - 1 - i) x_(i)^2 (0-based)
  // ratio  = sum_{i<j} x_(i) / x_(j) = sum_j prefix_j / x_(j)
  double min_sq = 0.0;
  double total = 0.0;
  double sum_sq = 0.0;
  double ratio = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = s[i];
    const double v2 = v * v;
    min_sq += static_cast<double>(n - 1 - i) * v2;
    ratio += total / v;
    total += v;
    sum_sq += v2;
  }
  const double cross = 0.5 * (total * total - sum_sq);  // sum_{i<j} x_i x_j
  const double nn = static_cast<double>(n);
  const double scale = 2.0 / (nn * (nn - 1.0));

  DepartureEstimate est;
  est.u1 = scale * (min_sq + 0.5 * cross);
  est.u2 = scale * 0.5 * ratio;
  est.sigma2_hat = sum_sq / (2.0 * nn);
  est.delta_hat = est.u1 / est.sigma2_hat - est.u2 - 1.0;
  return est;
}

double population_delta(const AlternativeSpec& dist) {
  const Moments m(dist);
  const double mu = m.mean();
  return (m.min_square() + 0.5 * mu * mu) / m.sigma2() - 0.5 * m.min_over_max() - 1.0;
}

double population_departure(const AlternativeSpec& dist) {
  const Moments m(dist);
  const double mu = m.mean();
  return (0.5 * m.min_square() + 0.5 * mu * mu) / m.sigma2() - 0.5 * m.min_over_max() - 1.0;
}

double null_variance_integrand(double x, double s) {
  if (!(x >= 0.0)) throw DomainError("null_variance_integrand: x must be >= 0");
  if (!(s > 0.0)) throw DomainError("null_variance_integrand: s must be positive");
  const double u = x / (std::numbers::sqrt2 * s);
  // sqrt(2 pi)(s^2 - x^2) erf(u) / (s x) = sqrt(2 pi)(s^2 - x^2) erf_over(u) / (sqrt2 s^2)
  const double ratio_term = std::sqrt(std::numbers::pi) * (s * s - x * x) * erf_over(u) / (s * s);
  const double t = 8.0 - 6.0 * std::exp(-x * x / (2.0 * s * s)) - ratio_term;
  return 0.25 * t * t;
}

double null_variance_sigma0_sq(double s) {
  const RayleighParam p(s * s);
  const double e = integrate(
      [&](double x) { return null_variance_integrand(x, s) * rayleigh_pdf(x, p); }, 0.0, kInf, 1e-12);
  return e - 9.0;
}

double asymptotic_variance(const AlternativeSpec& dist) {
  const Moments m(dist);
  return m.variance([&](double x) { return m.projection(x); });
}

double plugin_asymptotic_variance(const AlternativeSpec& dist) {
  const Moments m(dist);
  const double mu = m.mean();
  const double theta1 = m.min_square() + 0.5 * mu * mu;
  const double s4 = m.sigma2() * m.sigma2();
  return m.variance([&](double x) { return m.projection(x) - theta1 * x * x / (2.0 * s4); });
}

}  // namespace rgof
