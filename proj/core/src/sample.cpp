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

#include "rgof/sample.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rgof/error.hpp"

namespace rgof {

void require_positive(std::span<const double> values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(std::isfinite(values[i]) && values[i] > 0.0)) {
      throw DomainError(std::string(what) + ": observation " + std::to_string(i + 1) +
                        " is not a positive finite number");
    }
  }
}

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  require_positive(values_, "Sample");
}

CensoredSample::CensoredSample(std::vector<Observation> obs) : obs_(std::move(obs)) {
  for (std::size_t i = 0; i < obs_.size(); ++i) {
    if (!(std::isfinite(obs_[i].time) && obs_[i].time > 0.0)) {
      throw DomainError("CensoredSample: observation " + std::to_string(i + 1) +
                        " has a nonpositive or non-finite time");
    }
  }
}

CensoredSample CensoredSample::uncensored(std::span<const double> values) {
  std::vector<Observation> obs;
  obs.reserve(values.size());
  for (double v : values) obs.push_back({v, true});
  return CensoredSample(std::move(obs));
}

std::size_t CensoredSample::event_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(obs_.begin(), obs_.end(), [](const Observation& o) { return o.event; }));
}

double CensoredSample::censored_fraction() const noexcept {
  if (obs_.empty()) return 0.0;
  return 1.0 - static_cast<double>(event_count()) / static_cast<double>(obs_.size());
}

}  // namespace rgof
