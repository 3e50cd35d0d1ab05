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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace rgof {

enum class Method {
  kUstat,          // complete data, simulated two-sided critical values
  kUstatCensored,  // right-censored data, normal rule with reweighted variance
  kJel,            // jackknife empirical likelihood, standard Rayleigh null
  kKs,             // Kolmogorov-Smirnov, parametric bootstrap
  kCvm,            // Cramer-von Mises, parametric bootstrap
};

std::string_view method_name(Method m) noexcept;
/// Accepts the names produced by method_name (case-insensitive).
/// Throws ConfigError otherwise.
Method parse_method(std::string_view name);

inline constexpr std::string_view kReportSchema = "gof-report/1";

/// Outcome of one goodness-of-fit test.
struct TestReport {
  Method method = Method::kUstat;
  double statistic = 0.0;
  /// (c1, c2) for two-sided simulated regions, a single upper critical value
  /// for one-sided rules, or the normal / chi-square threshold.
  std::vector<double> thresholds;
  std::optional<double> p_value;
  bool reject = false;
  double alpha = 0.05;
  std::size_t n = 0;
  std::optional<double> censored_fraction;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> runtime_ms;
  /// Method-specific intermediate values (z, sigma2_hat, lambda, ...).
  std::map<std::string, double> details;

  friend bool operator==(const TestReport&, const TestReport&) = default;
};

nlohmann::json to_json(const TestReport& report);
/// Throws ParseError on a missing field or a wrong schema tag.
TestReport report_from_json(const nlohmann::json& j);

/// Human-readable multi-line summary. Not a stable format.
std::string render_text(const TestReport& report);

}  // namespace rgof
