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

#include "rgof/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <iomanip>

#include "rgof/error.hpp"

namespace rgof {
namespace {

constexpr std::array<std::pair<Method, std::string_view>, 5> kMethods{{
    {Method::kUstat, "ustat"},
    {Method::kUstatCensored, "ustat-censored"},
    {Method::kJel, "jel"},
    {Method::kKs, "ks"},
    {Method::kCvm, "cvm"},
}};

template <class T>
T required(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("report: missing field '") + key + "'", 0);
  return j.at(key).get<T>();
}

}  // namespace

std::string_view method_name(Method m) noexcept {
  for (const auto& [method, name] : kMethods) {
    if (method == m) return name;
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  std::string lowered(name);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::replace(lowered.begin(), lowered.end(), '_', '-');
  for (const auto& [method, mname] : kMethods) {
    if (mname == lowered) return method;
  }
  throw ConfigError("unknown method '" + std::string(name) + "'; valid: ustat, ustat-censored, jel, ks, cvm");
}

nlohmann::json to_json(const TestReport& r) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["method"] = method_name(r.method);
  j["statistic"] = r.statistic;
  j["thresholds"] = r.thresholds;
  j["p_value"] = r.p_value ? nlohmann::json(*r.p_value) : nlohmann::json(nullptr);
  j["decision"] = r.reject ? "reject" : "accept";
  j["alpha"] = r.alpha;
  j["n"] = r.n;
  j["censored_fraction"] = r.censored_fraction ? nlohmann::json(*r.censored_fraction) : nlohmann::json(nullptr);
  j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
  if (r.runtime_ms) j["runtime_ms"] = *r.runtime_ms;
  j["details"] = r.details;
  return j;
}

TestReport report_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("report: expected a JSON object", 0);
  if (required<std::string>(j, "schema") != kReportSchema) {
    throw ParseError("report: unsupported schema '" + j.at("schema").get<std::string>() + "'", 0);
  }
  TestReport r;
  try {
    r.method = parse_method(required<std::string>(j, "method"));
  } catch (const ConfigError& e) {
    throw ParseError(e.what(), 0);
  }
  r.statistic = required<double>(j, "statistic");
  r.thresholds = required<std::vector<double>>(j, "thresholds");
  if (j.contains("p_value") && !j.at("p_value").is_null()) r.p_value = j.at("p_value").get<double>();
  const auto decision = required<std::string>(j, "decision");
  if (decision != "reject" && decision != "accept") throw ParseError("report: bad decision '" + decision + "'", 0);
  r.reject = decision == "reject";
  r.alpha = required<double>(j, "alpha");
  r.n = required<std::size_t>(j, "n");
  if (j.contains("censored_fraction") && !j.at("censored_fraction").is_null()) {
    r.censored_fraction = j.at("censored_fraction").get<double>();
  }
  if (j.contains("seed") && !j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("runtime_ms")) r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
  if (j.contains("details")) r.details = j.at("details").get<std::map<std::string, double>>();
  return r;
}

std::string render_text(const TestReport& r) {
  std::ostringstream os;
  os << std::setprecision(6) << std::fixed;
  os << "method:     " << method_name(r.method) << '\n';
  os << "n:          " << r.n << '\n';
  if (r.censored_fraction) os << "censored:   " << *r.censored_fraction << '\n';
  os << "statistic:  " << r.statistic << '\n';
  os << "alpha:      " << r.alpha << '\n';
  os << "thresholds:";
  for (double t : r.thresholds) os << ' ' << t;
  os << '\n';
  if (r.p_value) os << "p-value:    " << *r.p_value << '\n';
  os << std::defaultfloat << std::setprecision(10);
  for (const auto& [k, v] : r.details) os << "  " << k << " = " << v << '\n';
  if (r.seed) os << "seed:       " << *r.seed << '\n';
  if (r.runtime_ms) os << "runtime:    " << *r.runtime_ms << " ms\n";
  os << "decision:   " << (r.reject ? "reject H0 (not Rayleigh)" : "accept H0 (Rayleigh)") << '\n';
  return os.str();
}

}  // namespace rgof
