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

// gof: goodness-of-fit tests for the Rayleigh lifetime model.
//
//   gof test --data FILE [--censored] [--method ustat|jel|ks|cvm] ...
//   gof simulate type1|power|censored [--alt SPEC] [--n N,...] ...
//
// Exit status of `test`: 0 accept, 1 reject, 2 error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rgof/alternatives.hpp"
#include "rgof/censored.hpp"
#include "rgof/departure.hpp"
#include "rgof/error.hpp"
#include "rgof/ingest.hpp"
#include "rgof/jel.hpp"
#include "rgof/monte_carlo.hpp"
#include "rgof/rayleigh.hpp"
#include "rgof/report.hpp"
#include "rgof/special.hpp"

namespace {

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --seed, then GOF_SEED, then a fresh seed that is echoed to stderr.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("GOF_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("GOF_SEED is not an unsigned integer: " + std::string(env));
  }
  std::random_device rd;
  const std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  std::cerr << "seed: " << seed << '\n';
  return seed;
}

struct TestArgs {
  std::string data;
  bool censored = false;
  std::string method = "ustat";
  double alpha = 0.05;
  std::size_t reps = 10000;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  std::string format = "text";
  std::string report;
};

// Monte Carlo p-value from a sorted null sample.
double upper_p(const std::vector<double>& null, double t) {
  const auto above = null.end() - std::lower_bound(null.begin(), null.end(), t);
  return (1.0 + static_cast<double>(above)) / (1.0 + static_cast<double>(null.size()));
}

double two_sided_p(const std::vector<double>& null, double t) {
  const auto below = std::upper_bound(null.begin(), null.end(), t) - null.begin();
  const double lower = (1.0 + static_cast<double>(below)) / (1.0 + static_cast<double>(null.size()));
  return std::min(1.0, 2.0 * std::min(lower, upper_p(null, t)));
}

rgof::TestReport simulated_report(rgof::Method method, const rgof::Sample& x, const TestArgs& a,
                                  std::uint64_t seed) {
  const double sigma2 = rgof::estimate_sigma2(x);
  const double stat = rgof::complete_statistic(method, x);
  const auto null = rgof::simulate_null(method, x.size(), sigma2, a.reps, seed, a.threads);

  rgof::CriticalValues cv;
  cv.alpha = a.alpha;
  cv.reps = a.reps;
  cv.seed = seed;
  rgof::TestReport r;
  r.method = method;
  r.statistic = stat;
  if (method == rgof::Method::kUstat) {
    cv.c1 = rgof::quantile_type7(null, a.alpha / 2.0);
    cv.c2 = rgof::quantile_type7(null, 1.0 - a.alpha / 2.0);
    r.thresholds = {cv.c1, cv.c2};
    r.p_value = two_sided_p(null, stat);
  } else {
    cv.one_sided = true;
    cv.c2 = rgof::quantile_type7(null, 1.0 - a.alpha);
    r.thresholds = {cv.c2};
    r.p_value = upper_p(null, stat);
  }
  r.reject = cv.rejects(stat);
  r.alpha = a.alpha;
  r.n = x.size();
  r.seed = seed;
  r.details["sigma2_hat"] = sigma2;
  r.details["reps"] = static_cast<double>(a.reps);
  return r;
}

int run_test(const TestArgs& a) {
  const rgof::Method requested = rgof::parse_method(a.method);
  if (!(a.alpha > 0.0 && a.alpha < 1.0)) throw UsageError("--alpha must lie in (0, 1)");
  if (a.reps == 0) throw UsageError("--reps must be at least 1");
  if (a.format != "text" && a.format != "json") throw UsageError("--format must be text or json");

  const auto start = std::chrono::steady_clock::now();
  rgof::TestReport report;
  if (a.censored) {
    if (requested != rgof::Method::kUstat && requested != rgof::Method::kUstatCensored) {
      throw UsageError("method '" + std::string(rgof::method_name(requested)) +
                       "' does not support censored data; use --method ustat");
    }
    const auto data = rgof::ingest_censored(a.data);
    report = rgof::censored_test(data, a.alpha);
  } else {
    if (requested == rgof::Method::kUstatCensored) throw UsageError("ustat-censored needs --censored");
    const auto x = rgof::ingest_complete(a.data);
    if (requested == rgof::Method::kJel) {
      report = rgof::to_report(rgof::jel_test(x, a.alpha), a.alpha, x.size());
    } else {
      report = simulated_report(requested, x, a, resolve_seed(a.seed));
    }
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;

  if (!a.report.empty()) {
    std::ofstream out(a.report);
    if (!out) throw std::runtime_error("cannot write " + a.report);
    out << rgof::to_json(report).dump(2) << '\n';
  }
  report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  if (a.format == "json") {
    std::cout << rgof::to_json(report).dump(2) << '\n';
  } else {
    std::cout << rgof::render_text(report);
  }
  return report.reject ? kExitReject : kExitAccept;
}

struct SimArgs {
  std::string kind;
  std::string alt;
  std::vector<std::size_t> n;
  std::vector<double> alpha;
  std::size_t reps = 10000;
  std::optional<std::size_t> inner_reps;
  std::vector<double> censoring;
  std::string method = "ustat";
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  bool nested = false;
  bool paper_tables = false;
  std::string out;
  std::string json;
};

std::vector<rgof::SimulationSpec> build_specs(const SimArgs& a, std::uint64_t seed) {
  if (a.paper_tables) {
    std::vector<rgof::SimulationSpec> grid;
    if (a.kind == "type1") grid = rgof::type1_grid(a.reps, seed);
    if (a.kind == "power") grid = rgof::power_grid(a.reps, seed);
    if (a.kind == "censored") grid = rgof::censored_grid(a.reps, seed);
    for (auto& s : grid) {
      s.inner_reps = a.inner_reps.value_or(a.reps);
      s.threads = a.threads;
      s.nested = a.nested;
    }
    return grid;
  }

  std::string alt_text = a.alt;
  if (alt_text.empty()) {
    if (a.kind == "power") throw UsageError("simulate power needs --alt");
    alt_text = "rayleigh:1";
  }
  const auto alt = rgof::AlternativeSpec::parse(alt_text);
  if (a.kind == "type1" && alt.family() != rgof::Family::kRayleigh) {
    throw UsageError("simulate type1 draws from a Rayleigh model; --alt must be rayleigh:<sigma2>");
  }
  rgof::Method method = rgof::parse_method(a.method);
  if (a.kind == "censored") {
    method = rgof::Method::kUstatCensored;
  } else if (method == rgof::Method::kUstatCensored) {
    throw UsageError("use `simulate censored` for the censored method");
  }

  const std::vector<std::size_t> sizes = a.n.empty() ? std::vector<std::size_t>{20} : a.n;
  const std::vector<double> alphas = a.alpha.empty() ? std::vector<double>{0.05} : a.alpha;
  std::vector<double> targets = a.censoring;
  if (a.kind == "censored" && targets.empty()) targets = {0.2};
  if (a.kind != "censored" && !targets.empty()) throw UsageError("--censoring applies to `simulate censored`");
  if (targets.empty()) targets = {0.0};

  std::vector<rgof::SimulationSpec> specs;
  for (double t : targets)
    for (std::size_t n : sizes)
      for (double al : alphas) {
        rgof::SimulationSpec s;
        s.alternative = alt;
        s.n = n;
        s.alpha = al;
        s.outer_reps = a.reps;
        s.inner_reps = a.inner_reps.value_or(a.reps);
        s.method = method;
        s.seed = seed;
        s.threads = a.threads;
        s.nested = a.nested;
        if (method == rgof::Method::kUstatCensored) s.censoring = rgof::CensoringSpec{0.0, t};
        s.validate();
        specs.push_back(std::move(s));
      }
  return specs;
}

int run_simulation(const SimArgs& a) {
  if (a.reps == 0) throw UsageError("--reps must be at least 1");
  const std::uint64_t seed = resolve_seed(a.seed);
  const auto rows = rgof::run_table(build_specs(a, seed));

  if (a.out.empty()) {
    rgof::write_table_csv(std::cout, rows);
  } else {
    std::ofstream out(a.out);
    if (!out) throw std::runtime_error("cannot write " + a.out);
    rgof::write_table_csv(out, rows);
  }
  if (!a.json.empty()) {
    std::ofstream out(a.json);
    if (!out) throw std::runtime_error("cannot write " + a.json);
    out << rgof::table_to_json(rows).dump(2) << '\n';
  }
  for (const auto& r : rows) {
    if (!r.cell) std::cerr << "flagged: " << r.spec.alternative.label() << " n=" << r.spec.n << ": " << r.error << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Goodness-of-fit tests for the Rayleigh lifetime model"};
  app.require_subcommand(1);

  TestArgs t;
  auto* test = app.add_subcommand("test", "Test a data file against the Rayleigh family");
  test->add_option("--data", t.data, "CSV file: one column, or time,status with --censored")->required();
  test->add_flag("--censored", t.censored, "Right-censored input (time,status; status 1 = event)");
  test->add_option("--method", t.method, "ustat, jel, ks or cvm")->capture_default_str();
  test->add_option("--alpha", t.alpha, "Significance level")->capture_default_str();
  test->add_option("--reps", t.reps, "Null replicates for simulated critical values")->capture_default_str();
  test->add_option("--seed", t.seed, "Random seed (falls back to GOF_SEED)");
  test->add_option("--threads", t.threads, "Worker threads, 0 = all cores")->capture_default_str();
  test->add_option("--format", t.format, "Output on stdout: text or json")->capture_default_str();
  test->add_option("--report", t.report, "Also write the JSON report to this file");

  SimArgs s;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo size and power tables");
  sim->add_option("kind", s.kind, "type1, power or censored")
      ->required()
      ->check(CLI::IsMember({"type1", "power", "censored"}));
  sim->add_option("--alt", s.alt, "Data model, e.g. weibull:1.5, gamma:3,1, lognormal:0,1, pareto:1,1");
  sim->add_option("--n", s.n, "Sample size(s)")->delimiter(',');
  sim->add_option("--alpha", s.alpha, "Significance level(s)")->delimiter(',');
  sim->add_option("--reps", s.reps, "Outer replicates per cell")->capture_default_str();
  sim->add_option("--inner-reps", s.inner_reps, "Null replicates for critical values (default: --reps)");
  sim->add_option("--censoring", s.censoring, "Censored fraction target(s) for `censored`")->delimiter(',');
  sim->add_option("--method", s.method, "ustat, jel, ks or cvm")->capture_default_str();
  sim->add_option("--seed", s.seed, "Random seed (falls back to GOF_SEED)");
  sim->add_option("--threads", s.threads, "Worker threads, 0 = all cores")->capture_default_str();
  sim->add_flag("--nested", s.nested, "Re-simulate critical values at every replicate's fitted sigma^2");
  sim->add_flag("--paper-tables", s.paper_tables, "Run the full reference grid for this kind");
  sim->add_option("--out", s.out, "CSV output file (default: stdout)");
  sim->add_option("--json", s.json, "Also write the table as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (test->parsed()) return run_test(t);
    return run_simulation(s);
  } catch (const rgof::ParseError& e) {
    std::cerr << "gof: " << t.data << ": " << e.what() << '\n';
  } catch (const UsageError& e) {
    std::cerr << "gof: usage: " << e.what() << '\n';
  } catch (const rgof::ConfigError& e) {
    std::cerr << "gof: usage: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "gof: error: " << e.what() << '\n';
  }
  return kExitError;
}
