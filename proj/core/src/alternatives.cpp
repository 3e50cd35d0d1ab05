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

#include "rgof/alternatives.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include <boost/math/distributions/exponential.hpp>
#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/inverse_gaussian.hpp>
#include <boost/math/distributions/lognormal.hpp>
#include <boost/math/distributions/pareto.hpp>
#include <boost/math/distributions/weibull.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include "rgof/error.hpp"
#include "rgof/special.hpp"

namespace rgof {
namespace {

namespace bm = boost::math;

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::string_view label;
  std::size_t arity;
};

constexpr std::array<FamilyInfo, 8> kFamilies{{
    {Family::kWeibull, "weibull", "Weibull", 1},
    {Family::kGamma, "gamma", "Gamma", 2},
    {Family::kLognormal, "lognormal", "Lognormal", 2},
    {Family::kPareto, "pareto", "Pareto", 2},
    {Family::kHalfNormal, "half-normal", "Half-normal", 1},
    {Family::kExponential, "exponential", "Exponential", 1},
    {Family::kInverseGaussian, "inverse-gaussian", "Inv Gaussian", 2},
    {Family::kRayleigh, "rayleigh", "Rayleigh", 1},
}};

const FamilyInfo& info(Family f) {
  for (const auto& i : kFamilies) {
    if (i.family == f) return i;
  }
  throw ConfigError("unknown family");
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::replace(out.begin(), out.end(), '_', '-');
  return out;
}

std::string format_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

double positive_uniform(Stream& stream) {
  double u = stream.uniform();
  while (u == 0.0) u = stream.uniform();
  return u;
}

}  // namespace

std::string_view family_name(Family family) noexcept {
  for (const auto& i : kFamilies) {
    if (i.family == family) return i.name;
  }
  return "unknown";
}

std::string valid_family_names() {
  std::string out;
  for (const auto& i : kFamilies) {
    if (!out.empty()) out += ", ";
    out += i.name;
  }
  return out;
}

AlternativeSpec::AlternativeSpec(Family family, std::span<const double> params)
    : family_(family), arity_(params.size()) {
  const auto& fi = info(family);
  if (params.size() != fi.arity) {
    throw ConfigError(std::string(fi.name) + " takes " + std::to_string(fi.arity) +
                      " parameter(s), got " + std::to_string(params.size()));
  }
  for (std::size_t i = 0; i < params.size(); ++i) {
    // meanlog is a location and may take any finite value.
    const bool location = family == Family::kLognormal && i == 0;
    if (!std::isfinite(params[i]) || (!location && params[i] <= 0.0)) {
      throw ConfigError(std::string(fi.name) + ": parameter " + std::to_string(i + 1) +
                        " must be " + (location ? "finite" : "positive and finite"));
    }
    params_[i] = params[i];
  }
}

AlternativeSpec AlternativeSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string name = lower(text.substr(0, colon));
  const FamilyInfo* found = nullptr;
  for (const auto& i : kFamilies) {
    if (i.name == name || (i.family == Family::kHalfNormal && name == "halfnormal") ||
        (i.family == Family::kInverseGaussian && (name == "invgauss" || name == "inverse-gauss"))) {
      found = &i;
    }
  }
  if (found == nullptr) {
    throw ConfigError("unknown family '" + name + "'; valid families: " + valid_family_names());
  }
  if (colon == std::string_view::npos) {
    throw ConfigError("missing parameters in '" + std::string(text) + "', expected family:p1[,p2]");
  }
  std::vector<double> params;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view tok = rest.substr(0, comma);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
      throw ConfigError("bad parameter '" + std::string(tok) + "' in '" + std::string(text) + "'");
    }
    params.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return AlternativeSpec(found->family, params);
}

std::string AlternativeSpec::to_string() const {
  std::string out(info(family_).name);
  out += ':';
  for (std::size_t i = 0; i < arity_; ++i) {
    if (i > 0) out += ',';
    out += format_number(params_[i]);
  }
  return out;
}

std::string AlternativeSpec::label() const {
  std::string out(info(family_).label);
  out += '(';
  for (std::size_t i = 0; i < arity_; ++i) {
    if (i > 0) out += ',';
    out += format_number(params_[i]);
  }
  return out + ')';
}

double AlternativeSpec::support_lower() const noexcept {
  return family_ == Family::kPareto ? params_[0] : 0.0;
}

double AlternativeSpec::pdf(double x) const {
  if (x < support_lower() || std::isinf(x)) return 0.0;
  const double a = params_[0];
  const double b = params_[1];
  switch (family_) {
    case Family::kWeibull:
      return bm::pdf(bm::weibull_distribution<double>(a, 1.0), x);
    case Family::kGamma:
      return bm::pdf(bm::gamma_distribution<double>(a, 1.0 / b), x);
    case Family::kLognormal:
      return x == 0.0 ? 0.0 : bm::pdf(bm::lognormal_distribution<double>(a, b), x);
    case Family::kPareto:
      return bm::pdf(bm::pareto_distribution<double>(a, b), x);
    case Family::kHalfNormal:
      return std::numbers::sqrt2 * std::numbers::inv_sqrtpi / a * std::exp(-0.5 * x * x / (a * a));
    case Family::kExponential:
      return bm::pdf(bm::exponential_distribution<double>(a), x);
    case Family::kInverseGaussian:
      // Log form: the direct product is inf * 0 for tiny x.
      if (x == 0.0) return 0.0;
      return std::exp(0.5 * std::log(b / (2.0 * std::numbers::pi)) - 1.5 * std::log(x) -
                      b * (x - a) * (x - a) / (2.0 * a * a * x));
    case Family::kRayleigh:
      return x / a * std::exp(-0.5 * x * x / a);
  }
  return 0.0;
}

double AlternativeSpec::survival(double x) const {
  if (x <= support_lower()) return 1.0;
  const double a = params_[0];
  const double b = params_[1];
  switch (family_) {
    case Family::kWeibull:
      return std::exp(-std::pow(x, a));
    case Family::kGamma:
      return bm::cdf(bm::complement(bm::gamma_distribution<double>(a, 1.0 / b), x));
    case Family::kLognormal:
      return bm::cdf(bm::complement(bm::lognormal_distribution<double>(a, b), x));
    case Family::kPareto:
      return std::pow(a / x, b);
    case Family::kHalfNormal:
      return rgof::erfc(x / (a * std::numbers::sqrt2));
    case Family::kExponential:
      return std::exp(-a * x);
    case Family::kInverseGaussian:
      return bm::cdf(bm::complement(bm::inverse_gaussian_distribution<double>(a, b), x));
    case Family::kRayleigh:
      return std::exp(-0.5 * x * x / a);
  }
  return 0.0;
}

double AlternativeSpec::second_moment() const {
  const double a = params_[0];
  const double b = params_[1];
  switch (family_) {
    case Family::kWeibull:
      return std::tgamma(1.0 + 2.0 / a);
    case Family::kGamma:
      return a * (a + 1.0) / (b * b);
    case Family::kLognormal:
      return std::exp(2.0 * a + 2.0 * b * b);
    case Family::kPareto:
      return b > 2.0 ? b * a * a / (b - 2.0) : std::numeric_limits<double>::infinity();
    case Family::kHalfNormal:
      return a * a;
    case Family::kExponential:
      return 2.0 / (a * a);
    case Family::kInverseGaussian:
      return a * a * a / b + a * a;
    case Family::kRayleigh:
      return 2.0 * a;
  }
  return 0.0;
}

double AlternativeSpec::draw(Stream& stream) const {
  const double a = params_[0];
  const double b = params_[1];
  switch (family_) {
    case Family::kWeibull:
      return std::pow(-std::log(positive_uniform(stream)), 1.0 / a);
    case Family::kGamma: {
      std::gamma_distribution<double> g(a, 1.0 / b);
      double v = g(stream.engine());
      while (v <= 0.0) v = g(stream.engine());
      return v;
    }
    case Family::kLognormal:
      return std::exp(a + b * stream.normal());
    case Family::kPareto:
      return a * std::pow(positive_uniform(stream), -1.0 / b);
    case Family::kHalfNormal: {
      double z = std::abs(stream.normal());
      while (z == 0.0) z = std::abs(stream.normal());
      return a * z;
    }
    case Family::kExponential:
      return -std::log(positive_uniform(stream)) / a;
    case Family::kInverseGaussian: {
      // Michael, Schucany and Haas transformation with one normal and one
      // uniform per variate.
      const double nu = stream.normal();
      const double y = nu * nu;
      const double mu = a;
      const double lambda = b;
      const double x = mu + mu * mu * y / (2.0 * lambda) -
                       mu / (2.0 * lambda) * std::sqrt(4.0 * mu * lambda * y + mu * mu * y * y);
      const double u = stream.uniform();
      const double v = u <= mu / (mu + x) ? x : mu * mu / x;
      return v > 0.0 ? v : std::numeric_limits<double>::min();
    }
    case Family::kRayleigh:
      return std::sqrt(a) * std::sqrt(-2.0 * std::log(positive_uniform(stream)));
  }
  return 0.0;
}

void fill_alternative(std::span<double> out, const AlternativeSpec& spec, Stream& stream) {
  for (double& v : out) v = spec.draw(stream);
}

Sample sample_alternative(const AlternativeSpec& spec, std::size_t n, Stream& stream) {
  if (n == 0) throw DomainError("sample_alternative: n must be >= 1");
  std::vector<double> values(n);
  fill_alternative(values, spec, stream);
  return Sample(std::move(values));
}

void CensoringSpec::validate() const {
  if (!(std::isfinite(rate_b) && rate_b > 0.0)) throw ConfigError("censoring rate must be positive");
  if (!(target_fraction >= 0.0 && target_fraction < 1.0)) {
    throw ConfigError("censoring target fraction must lie in [0, 1)");
  }
}

double censoring_probability(const std::function<double(double)>& survival, double rate_b) {
  if (!(rate_b > 0.0)) throw DomainError("censoring_probability: rate must be positive");
  // Substituting c = t / b turns the integral into E[S(E / b)], E ~ Exp(1).
  auto integrand = [&](double t) { return survival(t / rate_b) * std::exp(-t); };
  double error = 0.0;
  return bm::quadrature::gauss_kronrod<double, 31>::integrate(
      integrand, 0.0, std::numeric_limits<double>::infinity(), 20, 1e-12, &error);
}

double calibrate_censoring_rate(const std::function<double(double)>& survival, double target) {
  if (!(target > 0.0 && target < 1.0)) {
    throw DomainError("calibrate_censoring_rate: target must lie in (0, 1)");
  }
  auto residual = [&](double b) { return censoring_probability(survival, b) - target; };
  double lo = 1.0;
  double hi = 1.0;
  int guard = 0;
  while (residual(lo) > 0.0) {
    lo *= 0.25;
    if (++guard > 60) throw CalibrationError("censoring rate: no lower bracket");
  }
  guard = 0;
  while (residual(hi) < 0.0) {
    hi *= 4.0;
    if (++guard > 60) throw CalibrationError("censoring rate: no upper bracket");
  }
  if (lo == hi) return lo;
  std::uintmax_t iters = 200;
  const auto [a, b] = bm::tools::toms748_solve(residual, lo, hi, bm::tools::eps_tolerance<double>(50), iters);
  const double root = 0.5 * (a + b);
  if (std::abs(residual(root)) > 1e-6) throw CalibrationError("censoring rate: root search did not converge");
  return root;
}

CensoringSpec calibrate_censoring(const AlternativeSpec& spec, double target) {
  const double b = calibrate_censoring_rate([&spec](double t) { return spec.survival(t); }, target);
  return CensoringSpec{b, target};
}

CensoredSample sample_censored(const AlternativeSpec& spec, const CensoringSpec& cens,
                               std::size_t n, Stream& stream) {
  cens.validate();
  if (n == 0) throw DomainError("sample_censored: n must be >= 1");
  std::vector<Observation> obs(n);
  for (auto& o : obs) {
    const double x = spec.draw(stream);
    const double c = -std::log(positive_uniform(stream)) / cens.rate_b;
    o = x <= c ? Observation{x, true} : Observation{c, false};
  }
  return CensoredSample(std::move(obs));
}

}  // namespace rgof
