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

// Acceptance checks. Each criterion prints one PASS or FAIL line with the
// measured values. Run with a criterion number to check one, or with no
// arguments to check all; the exit status is nonzero if any check fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rgof/alternatives.hpp"
#include "rgof/censored.hpp"
#include "rgof/departure.hpp"
#include "rgof/error.hpp"
#include "rgof/ingest.hpp"
#include "rgof/jel.hpp"
#include "rgof/monte_carlo.hpp"
#include "rgof/random.hpp"
#include "rgof/rayleigh.hpp"

namespace rgof {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
    if (!ok) {
      pass = false;
      detail += " [x]";
    }
  }
};

std::string fmt(const char* f, double a) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

std::string fmt(const char* f, double a, double b, double c) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Sample ball_bearings() { return ingest_complete(std::string(RGOF_DATA_DIR) + "/ball_bearings.csv"); }

SimulationSpec spec(const char* alt, std::size_t n, double alpha, Method m, std::size_t reps, std::uint64_t seed) {
  SimulationSpec s;
  s.alternative = AlternativeSpec::parse(alt);
  s.n = n;
  s.alpha = alpha;
  s.method = m;
  s.outer_reps = reps;
  s.inner_reps = reps;
  s.seed = seed;
  return s;
}

std::vector<double> random_sample(Stream& s, std::size_t n) {
  std::vector<double> x(n);
  switch (s.engine()() % 4) {
    case 0: rayleigh_fill(x, RayleighParam(0.1 + 10.0 * s.uniform()), s); break;
    case 1: fill_alternative(x, AlternativeSpec(Family::kWeibull, {0.5 + 3.0 * s.uniform()}), s); break;
    case 2: fill_alternative(x, AlternativeSpec(Family::kLognormal, {0.0, 0.2 + s.uniform()}), s); break;
    default: fill_alternative(x, AlternativeSpec(Family::kGamma, {0.5 + 4.0 * s.uniform(), 1.0}), s); break;
  }
  return x;
}

Outcome criterion_1() {
  Outcome o;
  const auto start = Clock::now();
  const Sample x = ball_bearings();
  const double d = compute_delta(x).delta_hat;
  const double ms = 1e3 * seconds_since(start);
  o.check(std::abs(d - 0.4843) <= 5e-5, fmt("delta_hat=%.6f (target 0.4843 +/- 5e-5)", d));
  o.check(ms < 1.0, fmt("runtime=%.3f ms (< 1 ms)", ms));
  return o;
}

Outcome criterion_2() {
  Outcome o;
  const auto start = Clock::now();
  const Sample x = ball_bearings();
  const auto est = compute_delta(x);
  const auto cv5 = simulate_critical_values(x.size(), est.sigma2_hat, 0.05, 10000, 20260501);
  const auto cv1 = simulate_critical_values(x.size(), est.sigma2_hat, 0.01, 10000, 20260501);
  const double secs = seconds_since(start);
  o.check(std::abs(cv5.c1 - 0.1916) <= 0.02 && std::abs(cv5.c2 - 0.7769) <= 0.02,
          fmt("5%% pair (%.4f, %.4f) vs (0.1916, 0.7769) +/- 0.02", cv5.c1, cv5.c2));
  o.check(std::abs(cv1.c1 - 0.0863) <= 0.03 && std::abs(cv1.c2 - 0.8589) <= 0.03,
          fmt("1%% pair (%.4f, %.4f) vs (0.0863, 0.8589) +/- 0.03", cv1.c1, cv1.c2));
  o.check(!cv5.rejects(est.delta_hat) && !cv1.rejects(est.delta_hat), "accept at 5% and 1%");
  o.check(secs < 30.0, fmt("runtime=%.2f s (< 30 s)", secs));
  return o;
}

Outcome criterion_3() {
  Outcome o;
  struct Cell {
    std::size_t n;
    double alpha;
    double target;
    double tol;
  };
  const Cell cells[] = {{20, 0.05, 0.0477, 0.010}, {50, 0.05, 0.0472, 0.010}, {20, 0.01, 0.0107, 0.005},
                        {50, 0.01, 0.0090, 0.005}};
  const auto start = Clock::now();
  for (const auto& c : cells) {
    const auto cell = empirical_type1(spec("rayleigh:1", c.n, c.alpha, Method::kUstat, 10000, 20260502));
    char buf[256];
    std::snprintf(buf, sizeof buf, "n=%zu alpha=%.2f size=%.4f (target %.4f +/- %.3f)", c.n, c.alpha,
                  cell.rejection_rate, c.target, c.tol);
    o.check(std::abs(cell.rejection_rate - c.target) <= c.tol, buf);
  }
  const double secs = seconds_since(start);
  o.check(secs < 600.0, fmt("runtime=%.1f s (< 600 s)", secs));
  return o;
}

Outcome criterion_4() {
  Outcome o;
  const std::size_t reps = 4000;
  const auto weibull = empirical_power(spec("weibull:1.5", 50, 0.05, Method::kUstat, reps, 20260503));
  o.check(weibull.rejection_rate >= 0.99, fmt("Weibull(1.5) n=50 power=%.4f (>= 0.99)", weibull.rejection_rate));
  const auto lognormal = empirical_power(spec("lognormal:0,1", 30, 0.05, Method::kUstat, reps, 20260503));
  o.check(lognormal.rejection_rate >= 0.97,
          fmt("Lognormal(0,1) n=30 power=%.4f (>= 0.97)", lognormal.rejection_rate));
  const auto half = empirical_power(spec("half-normal:2", 50, 0.05, Method::kUstat, reps, 20260503));
  o.check(std::abs(half.rejection_rate - 0.8601) <= 0.05,
          fmt("Half-normal(2) n=50 power=%.4f (0.8601 +/- 0.05)", half.rejection_rate));
  const auto pareto = empirical_power(spec("pareto:1,1", 40, 0.05, Method::kUstat, reps, 20260503));
  o.check(pareto.rejection_rate >= 0.99, fmt("Pareto(1,1) n=40 power=%.4f (>= 0.99)", pareto.rejection_rate));
  return o;
}

Outcome criterion_5() {
  Outcome o;
  auto cell = [](const char* alt, double target) {
    auto s = spec(alt, 100, 0.05, Method::kUstatCensored, 4000, 20260504);
    s.censoring = CensoringSpec{0.0, target};
    const auto rows = censored_power_table({s});
    if (!rows[0].cell) throw CalibrationError(rows[0].error);
    return *rows[0].cell;
  };
  const auto rayleigh = cell("rayleigh:1", 0.2);
  o.check(std::abs(rayleigh.rejection_rate - 0.0491) <= 0.015,
          fmt("Rayleigh(1) n=100 20%% size=%.4f (0.0491 +/- 0.015)", rayleigh.rejection_rate));
  const auto expo = cell("exponential:1", 0.2);
  o.check(expo.rejection_rate >= 0.99, fmt("Exponential(1) n=100 20%% power=%.4f (>= 0.99)", expo.rejection_rate));
  const auto lognormal = cell("lognormal:2,1", 0.4);
  o.check(std::abs(lognormal.rejection_rate - 0.7346) <= 0.06,
          fmt("Lognormal(2,1) n=100 40%% power=%.4f (0.7346 +/- 0.06)", lognormal.rejection_rate));
  return o;
}

Outcome criterion_6() {
  Outcome o;
  Stream s(20260506);
  double worst = 0.0;
  for (int rep = 0; rep < 500; ++rep) {
    const auto x = random_sample(s, 2 + s.engine()() % 199);
    const double a = compute_delta_censored(CensoredSample::uncensored(x)).delta_c;
    worst = std::max(worst, std::abs(a - compute_delta(x).delta_hat));
  }
  o.check(worst <= 1e-12, fmt("max |delta_c - delta_hat| = %.3g over 500 samples (<= 1e-12)", worst));
  return o;
}

Outcome criterion_7() {
  Outcome o;
  Stream s(20260507);
  double worst = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const auto x = random_sample(s, 2 + s.engine()() % 199);
    const double base = compute_delta(x).delta_hat;
    for (double c : {1e-3, 1.0, 1e3}) {
      std::vector<double> y(x);
      for (double& v : y) v *= c;
      worst = std::max(worst, std::abs(compute_delta(y).delta_hat - base) / std::max(std::abs(base), 1e-300));
    }
  }
  o.check(worst <= 1e-10, fmt("max relative change %.3g over 100 samples x 3 scales (<= 1e-10)", worst));
  return o;
}

Outcome criterion_8() {
  Outcome o;
  Stream s(20260508);
  double worst_hat = 0.0;
  double worst_s = 0.0;
  for (int rep = 0; rep < 1000; ++rep) {
    const std::size_t n = 2 + rep % 199;
    const auto x = random_sample(s, n);
    worst_hat = std::max(worst_hat, std::abs(compute_delta(x).delta_hat - oracle::delta_hat(x)));
    worst_s = std::max(worst_s, std::abs(delta_s(x) - oracle::delta_s(x)) / std::max(1.0, std::abs(oracle::delta_s(x))));
  }
  o.check(worst_hat <= 1e-10, fmt("delta_hat max deviation %.3g (<= 1e-10)", worst_hat));
  o.check(worst_s <= 1e-10, fmt("delta_s max deviation %.3g (<= 1e-10)", worst_s));
  return o;
}

Outcome criterion_9() {
  Outcome o;
  constexpr std::size_t kReps = 2000;
  constexpr std::size_t kN = 200;
  std::size_t rejections = 0;
  double worst_residual = 0.0;
  double worst_pseudo = 0.0;
  std::size_t unsolved = 0;
  for (std::size_t rep = 0; rep < kReps; ++rep) {
    Stream s = Stream::derive(20260509, 1, rep);
    std::vector<double> x(kN);
    rayleigh_fill(x, RayleighParam::standard(), s);
    const JelResult r = jel_test(x, 0.05);
    rejections += r.reject ? 1 : 0;
    if (r.no_solution) {
      ++unsolved;
    } else {
      double g = 0.0;
      for (double v : r.pseudo_values) g += (v - kNullDelta) / (1.0 + r.lambda * (v - kNullDelta));
      worst_residual = std::max(worst_residual, std::abs(g / static_cast<double>(kN)));
    }
    // Leave-one-out recomputation on every replicate; the slow pair-sum
    // oracle on the first few.
    const double full = delta_s(x);
    for (std::size_t k = 0; k < kN; ++k) {
      std::vector<double> rest(x);
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      const double loo = rep < 5 ? oracle::delta_s(rest) : delta_s(rest);
      const double nu = static_cast<double>(kN) * (rep < 5 ? oracle::delta_s(x) : full) -
                        static_cast<double>(kN - 1) * loo;
      worst_pseudo = std::max(worst_pseudo, std::abs(r.pseudo_values[k] - nu) / std::max(1.0, std::abs(nu)));
    }
  }
  const double rate = static_cast<double>(rejections) / static_cast<double>(kReps);
  o.check(std::abs(rate - 0.05) <= 0.02, fmt("rejection rate %.4f (0.05 +/- 0.02)", rate));
  o.check(unsolved == 0 && worst_residual <= 1e-10,
          fmt("max lambda residual %.3g with %g unsolved (<= 1e-10)", worst_residual, static_cast<double>(unsolved)));
  o.check(worst_pseudo <= 1e-12, fmt("pseudo-value max deviation %.3g (<= 1e-12)", worst_pseudo));
  return o;
}

Outcome criterion_10() {
  Outcome o;
  const AlternativeSpec rayleigh(Family::kRayleigh, {1.0});
  constexpr std::size_t kN = 10000;
  for (double target : {0.2, 0.4}) {
    const auto cens = calibrate_censoring(rayleigh, target);
    Stream s = Stream::derive(20260510, 4, static_cast<std::uint64_t>(target * 10));
    const double frac = sample_censored(rayleigh, cens, kN, s).censored_fraction();
    const double se = std::sqrt(target * (1.0 - target) / kN);
    o.check(std::abs(frac - target) <= 3.0 * se,
            fmt("target %.1f: b=%.5f fraction %.4f", target, cens.rate_b, frac) + fmt(" (3 SE = %.4f)", 3.0 * se));
  }
  return o;
}

std::pair<std::string, std::string> table_output(unsigned threads, std::uint64_t seed) {
  std::vector<SimulationSpec> specs;
  for (Method m : {Method::kUstat, Method::kKs, Method::kCvm, Method::kJel}) {
    auto s = spec("gamma:2,1", 25, 0.05, m, 300, seed);
    s.threads = threads;
    specs.push_back(s);
  }
  auto nested = spec("rayleigh:1", 15, 0.05, Method::kUstat, 60, seed);
  nested.inner_reps = 80;
  nested.nested = true;
  nested.threads = threads;
  specs.push_back(nested);
  auto c = spec("inverse-gaussian:2,1", 60, 0.05, Method::kUstatCensored, 300, seed);
  c.censoring = CensoringSpec{0.0, 0.4};
  c.threads = threads;
  specs.push_back(c);
  const auto rows = run_table(specs);
  std::ostringstream csv;
  write_table_csv(csv, rows);
  const auto null = simulate_null(Method::kUstat, 30, 1.0, 997, seed, threads);
  std::ostringstream json;
  json << table_to_json(rows).dump(2) << '\n' << nlohmann::json(null).dump();
  return {csv.str(), json.str()};
}

Outcome criterion_11() {
  Outcome o;
  for (std::uint64_t seed : {1ull, 20260511ull}) {
    const auto reference = table_output(1, seed);
    for (unsigned threads : {2u, 4u, 7u}) {
      const auto again = table_output(threads, seed);
      char buf[96];
      std::snprintf(buf, sizeof buf, "seed %llu threads %u identical", static_cast<unsigned long long>(seed), threads);
      o.check(again == reference, buf);
    }
    o.check(table_output(1, seed) == reference, "rerun identical");
  }
  o.check(table_output(1, 1) != table_output(1, 2), "different seeds differ");
  return o;
}

const std::vector<std::function<Outcome()>>& criteria() {
  static const std::vector<std::function<Outcome()>> all = {
      criterion_1, criterion_2, criterion_3, criterion_4,  criterion_5, criterion_6,
      criterion_7, criterion_8, criterion_9, criterion_10, criterion_11};
  return all;
}

bool run(std::size_t k) {
  Outcome o;
  try {
    o = criteria()[k - 1]();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  std::printf("%s criterion %zu: %s\n", o.pass ? "PASS" : "FAIL", k, o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace
}  // namespace rgof

int main(int argc, char** argv) {
  const std::size_t total = rgof::criteria().size();
  bool ok = true;
  if (argc < 2) {
    for (std::size_t k = 1; k <= total; ++k) ok = rgof::run(k) && ok;
    return ok ? 0 : 1;
  }
  for (int i = 1; i < argc; ++i) {
    const long k = std::strtol(argv[i], nullptr, 10);
    if (k < 1 || static_cast<std::size_t>(k) > total) {
      std::fprintf(stderr, "unknown criterion '%s' (1-%zu)\n", argv[i], total);
      return 2;
    }
    ok = rgof::run(static_cast<std::size_t>(k)) && ok;
  }
  return ok ? 0 : 1;
}
