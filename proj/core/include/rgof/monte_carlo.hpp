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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rgof/alternatives.hpp"
#include "rgof/report.hpp"

namespace rgof {

/// Rejection region from a simulated null distribution. Two-sided rules
/// reject outside [c1, c2] with P(T < c1) = P(T > c2) = alpha/2; one-sided
/// rules (KS, CvM) reject above c2 and carry c1 = 0.
struct CriticalValues {
  double c1 = 0.0;
  double c2 = 0.0;
  double alpha = 0.05;
  std::size_t reps = 0;
  std::uint64_t seed = 0;
  bool one_sided = false;

  bool rejects(double statistic) const noexcept {
    return statistic > c2 || (!one_sided && statistic < c1);
  }
};

/// Worker count used when `threads` is 0.
unsigned default_threads() noexcept;

/// Runs body(i) for i in [0, count) on up to `threads` workers (0 = all
/// cores). Each index runs exactly once; callers write results by index.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

/// Statistic of `method` for complete data x (the fitted Rayleigh is
/// re-estimated from x). kUstatCensored is not a complete-data method.
double complete_statistic(Method method, std::span<const double> x);

/// reps statistics of `method` on Rayleigh(sigma2) samples of size n,
/// sorted ascending. Replicate i uses Stream::derive(seed, kNullTag, i).
std::vector<double> simulate_null(Method method, std::size_t n, double sigma2, std::size_t reps,
                                  std::uint64_t seed, unsigned threads = 0);

/// Type-7 quantiles of the simulated null of delta_hat at alpha/2 and
/// 1 - alpha/2.
CriticalValues simulate_critical_values(std::size_t n, double sigma2, double alpha, std::size_t reps,
                                        std::uint64_t seed, unsigned threads = 0);

/// Same for any simulated method; KS and CvM take the upper 1 - alpha point.
CriticalValues simulate_method_critical_values(Method method, std::size_t n, double sigma2, double alpha,
                                               std::size_t reps, std::uint64_t seed, unsigned threads = 0);

struct SimulationSpec {
  AlternativeSpec alternative{Family::kRayleigh, {1.0}};
  std::size_t n = 20;
  double alpha = 0.05;
  std::size_t outer_reps = 10000;
  std::size_t inner_reps = 10000;
  /// Censoring target or calibrated rate; required for kUstatCensored.
  std::optional<CensoringSpec> censoring;
  Method method = Method::kUstat;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  /// Re-simulate critical values at each replicate's sigma2_hat instead of
  /// reusing one scale-free set.
  bool nested = false;

  /// Throws ConfigError on inconsistent fields.
  void validate() const;
};

struct PowerCell {
  double rejection_rate = 0.0;
  double mc_standard_error = 0.0;  // sqrt(r (1 - r) / outer_reps)
  std::size_t rejections = 0;
  std::size_t reps = 0;
  /// Censored replicates where the statistic could not be formed (fewer
  /// than two events, or a zero censoring weight); counted as acceptances.
  std::size_t degenerate = 0;
};

PowerCell make_cell(std::size_t rejections, std::size_t reps, std::size_t degenerate = 0);

/// Rejection rate under a Rayleigh model. Throws ConfigError otherwise.
PowerCell empirical_type1(const SimulationSpec& spec);

/// Rejection rate under spec.alternative. Simulated-critical-value methods
/// use one null set at sigma^2 = 1 (the statistics are scale invariant)
/// unless spec.nested; JEL uses the chi-square(1) point; the censored
/// method uses its normal rule.
PowerCell empirical_power(const SimulationSpec& spec);

struct TableRow {
  SimulationSpec spec;
  std::optional<PowerCell> cell;
  std::string error;  // set when the row was flagged
};

/// Runs every spec in order. Censored rows without a calibrated rate are
/// calibrated from their target fraction; a row whose calibration or run
/// fails is flagged and the rest proceed.
std::vector<TableRow> run_table(const std::vector<SimulationSpec>& rows);

/// run_table restricted to censored specs. Throws ConfigError if a row has
/// no censoring or uses another method.
std::vector<TableRow> censored_power_table(const std::vector<SimulationSpec>& rows);

/// CSV with header alternative,n,alpha,method,censoring,rate,se,seed.
/// Flagged rows print NA for rate and se.
void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows);
nlohmann::json table_to_json(const std::vector<TableRow>& rows);

/// Full size, power and censored-power grids.
std::vector<SimulationSpec> type1_grid(std::size_t reps, std::uint64_t seed);
std::vector<SimulationSpec> power_grid(std::size_t reps, std::uint64_t seed);
std::vector<SimulationSpec> censored_grid(std::size_t reps, std::uint64_t seed);

}  // namespace rgof
