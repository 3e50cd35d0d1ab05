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

#include "rgof/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "rgof/censored.hpp"
#include "rgof/departure.hpp"
#include "rgof/edf.hpp"
#include "rgof/error.hpp"
#include "rgof/jel.hpp"
#include "rgof/rayleigh.hpp"
#include "rgof/special.hpp"

namespace rgof {
namespace {

// Stream tags. Distinct tags keep the null, outer and nested streams apart
// even when they share a seed.
constexpr std::uint64_t kNullTag = 1;
constexpr std::uint64_t kOuterTag = 2;
constexpr std::uint64_t kNestedTag = 3;

bool simulated_rule(Method m) { return m == Method::kUstat || m == Method::kKs || m == Method::kCvm; }

std::string format_number(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

// Quotes a field that contains a delimiter or quote.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace

unsigned default_threads() noexcept {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = default_threads();
  const std::size_t workers = std::min<std::size_t>(threads, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    } catch (...) {
      const std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(count);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

double complete_statistic(Method method, std::span<const double> x) {
  switch (method) {
    case Method::kUstat:
      return compute_delta(x).delta_hat;
    case Method::kKs:
      return edf_fitted(EdfKind::kKs, x);
    case Method::kCvm:
      return edf_fitted(EdfKind::kCvm, x);
    case Method::kJel:
      return jel_test(x, 0.05).minus2logR;
    case Method::kUstatCensored:
      break;
  }
  throw ConfigError("complete_statistic: method needs censored data");
}

std::vector<double> simulate_null(Method method, std::size_t n, double sigma2, std::size_t reps,
                                  std::uint64_t seed, unsigned threads) {
  if (reps == 0) throw ConfigError("simulate_null: reps must be at least 1");
  if (n < 2) throw ConfigError("simulate_null: n must be at least 2");
  const RayleighParam p(sigma2);
  std::vector<double> stats(reps);
  parallel_for(reps, threads, [&](std::size_t i) {
    Stream s = Stream::derive(seed, kNullTag, i);
    std::vector<double> x(n);
    rayleigh_fill(x, p, s);
    stats[i] = complete_statistic(method, x);
  });
  std::sort(stats.begin(), stats.end());
  return stats;
}

CriticalValues simulate_method_critical_values(Method method, std::size_t n, double sigma2, double alpha,
                                               std::size_t reps, std::uint64_t seed, unsigned threads) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
  if (!simulated_rule(method)) throw ConfigError("method does not use simulated critical values");
  const auto stats = simulate_null(method, n, sigma2, reps, seed, threads);
  CriticalValues cv;
  cv.alpha = alpha;
  cv.reps = reps;
  cv.seed = seed;
  if (method == Method::kUstat) {
    cv.c1 = quantile_type7(stats, alpha / 2.0);
    cv.c2 = quantile_type7(stats, 1.0 - alpha / 2.0);
  } else {
    cv.one_sided = true;
    cv.c2 = quantile_type7(stats, 1.0 - alpha);
  }
  return cv;
}

CriticalValues simulate_critical_values(std::size_t n, double sigma2, double alpha, std::size_t reps,
                                        std::uint64_t seed, unsigned threads) {
  return simulate_method_critical_values(Method::kUstat, n, sigma2, alpha, reps, seed, threads);
}

void SimulationSpec::validate() const {
  if (outer_reps == 0) throw ConfigError("outer_reps must be at least 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
  if (simulated_rule(method) && inner_reps == 0) throw ConfigError("inner_reps must be at least 1");
  if (method == Method::kUstatCensored) {
    if (!censoring) throw ConfigError("censored method needs a censoring spec");
    if (censoring->rate_b == 0.0 && !(censoring->target_fraction > 0.0 && censoring->target_fraction < 1.0)) {
      throw ConfigError("censoring needs a rate or a target fraction in (0, 1)");
    }
    if (censoring->rate_b != 0.0) censoring->validate();
    if (n < 3) throw ConfigError("censored method needs n >= 3");
  } else {
    if (censoring) throw ConfigError("censoring is only supported by the ustat-censored method");
    if (n < (method == Method::kJel ? 3u : 2u)) throw ConfigError("sample size too small for method");
  }
}

PowerCell make_cell(std::size_t rejections, std::size_t reps, std::size_t degenerate) {
  PowerCell c;
  c.rejections = rejections;
  c.reps = reps;
  c.degenerate = degenerate;
  c.rejection_rate = static_cast<double>(rejections) / static_cast<double>(reps);
  c.mc_standard_error = std::sqrt(c.rejection_rate * (1.0 - c.rejection_rate) / static_cast<double>(reps));
  return c;
}

PowerCell empirical_power(const SimulationSpec& spec) {
  spec.validate();
  // 0 = accept, 1 = reject, 2 = degenerate (accept)
  std::vector<unsigned char> outcome(spec.outer_reps, 0);

  if (spec.method == Method::kUstatCensored) {
    CensoringSpec cens = *spec.censoring;
    if (cens.rate_b == 0.0) cens = calibrate_censoring(spec.alternative, cens.target_fraction);
    parallel_for(spec.outer_reps, spec.threads, [&](std::size_t i) {
      Stream s = Stream::derive(spec.seed, kOuterTag, i);
      const CensoredSample data = sample_censored(spec.alternative, cens, spec.n, s);
      try {
        outcome[i] = censored_test(data, spec.alpha).reject ? 1 : 0;
      } catch (const DegenerateWeightError&) {
        outcome[i] = 2;
      } catch (const DomainError&) {
        outcome[i] = 2;
      }
    });
  } else if (spec.method == Method::kJel) {
    parallel_for(spec.outer_reps, spec.threads, [&](std::size_t i) {
      Stream s = Stream::derive(spec.seed, kOuterTag, i);
      std::vector<double> x(spec.n);
      fill_alternative(x, spec.alternative, s);
      outcome[i] = jel_test(x, spec.alpha).reject ? 1 : 0;
    });
  } else if (!spec.nested) {
    const CriticalValues cv =
        simulate_method_critical_values(spec.method, spec.n, 1.0, spec.alpha, spec.inner_reps, spec.seed, spec.threads);
    parallel_for(spec.outer_reps, spec.threads, [&](std::size_t i) {
      Stream s = Stream::derive(spec.seed, kOuterTag, i);
      std::vector<double> x(spec.n);
      fill_alternative(x, spec.alternative, s);
      outcome[i] = cv.rejects(complete_statistic(spec.method, x)) ? 1 : 0;
    });
  } else {
    parallel_for(spec.outer_reps, spec.threads, [&](std::size_t i) {
      Stream s = Stream::derive(spec.seed, kOuterTag, i);
      std::vector<double> x(spec.n);
      fill_alternative(x, spec.alternative, s);
      const double stat = complete_statistic(spec.method, x);
      const double sigma2 = estimate_sigma2(x);
      const std::uint64_t inner_seed = mix64(spec.seed ^ mix64(kNestedTag + i));
      const CriticalValues cv =
          simulate_method_critical_values(spec.method, spec.n, sigma2, spec.alpha, spec.inner_reps, inner_seed, 1);
      outcome[i] = cv.rejects(stat) ? 1 : 0;
    });
  }

  std::size_t rejections = 0;
  std::size_t degenerate = 0;
  for (unsigned char o : outcome) {
    rejections += (o == 1);
    degenerate += (o == 2);
  }
  return make_cell(rejections, spec.outer_reps, degenerate);
}

PowerCell empirical_type1(const SimulationSpec& spec) {
  if (spec.alternative.family() != Family::kRayleigh) {
    throw ConfigError("empirical_type1: data must come from a Rayleigh model");
  }
  return empirical_power(spec);
}

std::vector<TableRow> run_table(const std::vector<SimulationSpec>& rows) {
  std::vector<TableRow> out;
  out.reserve(rows.size());
  for (const auto& spec : rows) {
    TableRow row{spec, std::nullopt, {}};
    try {
      if (row.spec.censoring && row.spec.censoring->rate_b == 0.0) {
        row.spec.censoring =
            calibrate_censoring(row.spec.alternative, row.spec.censoring->target_fraction);
      }
      row.cell = empirical_power(row.spec);
    } catch (const CalibrationError& e) {
      row.error = e.what();
    } catch (const DomainError& e) {
      row.error = e.what();
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<TableRow> censored_power_table(const std::vector<SimulationSpec>& rows) {
  for (const auto& spec : rows) {
    if (spec.method != Method::kUstatCensored || !spec.censoring) {
      throw ConfigError("censored_power_table: every row needs censoring and the ustat-censored method");
    }
  }
  return run_table(rows);
}

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows) {
  out << "alternative,n,alpha,method,censoring,rate,se,seed\n";
  for (const auto& r : rows) {
    const double cens = r.spec.censoring ? r.spec.censoring->target_fraction : 0.0;
    out << csv_field(r.spec.alternative.to_string()) << ',' << r.spec.n << ',' << format_number("%g", r.spec.alpha) << ','
        << method_name(r.spec.method) << ',' << format_number("%g", cens) << ',';
    if (r.cell) {
      out << format_number("%.6f", r.cell->rejection_rate) << ',' << format_number("%.6f", r.cell->mc_standard_error);
    } else {
      out << "NA,NA";
    }
    out << ',' << r.spec.seed << '\n';
  }
}

nlohmann::json table_to_json(const std::vector<TableRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j;
    j["alternative"] = r.spec.alternative.to_string();
    j["label"] = r.spec.alternative.label();
    j["n"] = r.spec.n;
    j["alpha"] = r.spec.alpha;
    j["method"] = method_name(r.spec.method);
    j["outer_reps"] = r.spec.outer_reps;
    if (r.spec.method == Method::kUstat || r.spec.method == Method::kKs || r.spec.method == Method::kCvm) {
      j["inner_reps"] = r.spec.inner_reps;
      j["nested"] = r.spec.nested;
    }
    if (r.spec.censoring) {
      j["censoring"] = r.spec.censoring->target_fraction;
      j["censoring_rate"] = r.spec.censoring->rate_b;
    }
    j["seed"] = r.spec.seed;
    if (r.cell) {
      j["rate"] = r.cell->rejection_rate;
      j["se"] = r.cell->mc_standard_error;
      j["rejections"] = r.cell->rejections;
      if (r.cell->degenerate > 0) j["degenerate"] = r.cell->degenerate;
    } else {
      j["error"] = r.error;
    }
    arr.push_back(std::move(j));
  }
  return {{"schema", "gof-table/1"}, {"rows", std::move(arr)}};
}

namespace {

constexpr std::size_t kTableSizes[] = {10, 20, 30, 40, 50};
constexpr double kTableAlphas[] = {0.01, 0.05};
constexpr Method kTableMethods[] = {Method::kUstat, Method::kKs, Method::kCvm};

SimulationSpec grid_spec(const AlternativeSpec& alt, std::size_t n, double alpha, Method m, std::size_t reps,
                         std::uint64_t seed) {
  SimulationSpec s;
  s.alternative = alt;
  s.n = n;
  s.alpha = alpha;
  s.method = m;
  s.outer_reps = reps;
  s.inner_reps = reps;
  s.seed = seed;
  return s;
}

}  // namespace

std::vector<SimulationSpec> type1_grid(std::size_t reps, std::uint64_t seed) {
  std::vector<SimulationSpec> out;
  const AlternativeSpec null(Family::kRayleigh, {1.0});
  for (double a : kTableAlphas)
    for (std::size_t n : kTableSizes)
      for (Method m : kTableMethods) out.push_back(grid_spec(null, n, a, m, reps, seed));
  return out;
}

std::vector<SimulationSpec> power_grid(std::size_t reps, std::uint64_t seed) {
  const AlternativeSpec alts[] = {
      {Family::kWeibull, {1.5}},   {Family::kGamma, {1.0, 1.0}},  {Family::kLognormal, {0.0, 1.0}},
      {Family::kPareto, {1.0, 1.0}}, {Family::kHalfNormal, {2.0}},
  };
  std::vector<SimulationSpec> out;
  for (const auto& alt : alts)
    for (double a : kTableAlphas)
      for (std::size_t n : kTableSizes)
        for (Method m : kTableMethods) out.push_back(grid_spec(alt, n, a, m, reps, seed));
  return out;
}

std::vector<SimulationSpec> censored_grid(std::size_t reps, std::uint64_t seed) {
  const AlternativeSpec alts[] = {
      {Family::kRayleigh, {1.0}},        {Family::kExponential, {1.0}},          {Family::kLognormal, {2.0, 1.0}},
      {Family::kGamma, {3.0, 1.0}},      {Family::kInverseGaussian, {2.0, 1.0}},
  };
  constexpr std::size_t sizes[] = {50, 75, 100, 200};
  constexpr double targets[] = {0.2, 0.4};
  std::vector<SimulationSpec> out;
  for (double t : targets)
    for (std::size_t n : sizes)
      for (const auto& alt : alts)
        for (double a : kTableAlphas) {
          SimulationSpec s = grid_spec(alt, n, a, Method::kUstatCensored, reps, seed);
          s.censoring = CensoringSpec{0.0, t};
          out.push_back(std::move(s));
        }
  return out;
}

}  // namespace rgof
