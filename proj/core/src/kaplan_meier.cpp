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

#include "rgof/kaplan_meier.hpp"

#include <algorithm>
#include <string>

#include "rgof/error.hpp"

namespace rgof {
namespace {

struct TimeGroup {
  double time;
  std::size_t events;
  std::size_t censored;
};

// Distinct observed times, ascending, with event / censoring counts.
std::vector<TimeGroup> group_times(const CensoredSample& data) {
  std::vector<Observation> obs(data.observations().begin(), data.observations().end());
  std::sort(obs.begin(), obs.end(), [](const Observation& a, const Observation& b) { return a.time < b.time; });
  std::vector<TimeGroup> groups;
  for (const auto& o : obs) {
    if (groups.empty() || groups.back().time != o.time) groups.push_back({o.time, 0, 0});
    (o.event ? groups.back().events : groups.back().censored) += 1;
  }
  return groups;
}

}  // namespace

KmCurve::KmCurve(std::vector<double> times, std::vector<double> values)
    : times_(std::move(times)), values_(std::move(values)) {
  if (times_.size() != values_.size()) throw DomainError("KmCurve: size mismatch");
}

double KmCurve::operator()(double t) const noexcept {
  const auto it = std::upper_bound(times_.begin(), times_.end(), t);
  if (it == times_.begin()) return 1.0;
  return values_[static_cast<std::size_t>(it - times_.begin()) - 1];
}

double KmCurve::left_limit(double t) const noexcept {
  const auto it = std::lower_bound(times_.begin(), times_.end(), t);
  if (it == times_.begin()) return 1.0;
  return values_[static_cast<std::size_t>(it - times_.begin()) - 1];
}

KmCurve km_censoring(const CensoredSample& data) {
  if (data.empty()) throw DomainError("km_censoring: empty sample");
  std::vector<double> times;
  std::vector<double> values;
  std::size_t at_risk = data.size();  // #{Y >= u}
  double surv = 1.0;
  for (const auto& g : group_times(data)) {
    if (g.censored > 0) {
      const auto risk = static_cast<double>(at_risk - g.events);
      surv *= 1.0 - static_cast<double>(g.censored) / risk;
      times.push_back(g.time);
      values.push_back(surv);
    }
    at_risk -= g.events + g.censored;
  }
  return KmCurve(std::move(times), std::move(values));
}

KmCurve km_lifetime(const CensoredSample& data) {
  if (data.empty()) throw DomainError("km_lifetime: empty sample");
  std::vector<double> times;
  std::vector<double> values;
  std::size_t at_risk = data.size();
  double surv = 1.0;
  for (const auto& g : group_times(data)) {
    if (g.events > 0) {
      surv *= 1.0 - static_cast<double>(g.events) / static_cast<double>(at_risk);
      times.push_back(g.time);
      values.push_back(surv);
    }
    at_risk -= g.events + g.censored;
  }
  return KmCurve(std::move(times), std::move(values));
}

double ipcw_weight(const KmCurve& censoring, double y, bool delta) {
  if (!(y > 0.0)) throw DomainError("ipcw_weight: y must be positive");
  if (!delta) return 0.0;
  const double k = censoring.left_limit(y);
  if (k <= 0.0) {
    throw DegenerateWeightError("event at time " + std::to_string(y) + " has zero censoring survival");
  }
  return 1.0 / k;
}

std::vector<double> ipcw_weights(const CensoredSample& data, const KmCurve& censoring) {
  std::vector<double> w(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    w[i] = ipcw_weight(censoring, data[i].time, data[i].event);
  }
  return w;
}

}  // namespace rgof
