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
#include <span>
#include <vector>

namespace rgof {

/// Complete lifetime data: strictly positive, finite observations.
class Sample {
 public:
  Sample() = default;
  /// Throws DomainError if any value is nonpositive or not finite.
  explicit Sample(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

  operator std::span<const double>() const noexcept { return values_; }  // NOLINT

  friend bool operator==(const Sample&, const Sample&) = default;

 private:
  std::vector<double> values_;
};

/// One right-censored observation: time = min(lifetime, censoring time),
/// event = (lifetime <= censoring time).
struct Observation {
  double time = 0.0;
  bool event = true;

  friend bool operator==(const Observation&, const Observation&) = default;
};

class CensoredSample {
 public:
  CensoredSample() = default;
  /// Throws DomainError if any time is nonpositive or not finite.
  explicit CensoredSample(std::vector<Observation> obs);

  /// Every observation marked as an event.
  static CensoredSample uncensored(std::span<const double> values);

  std::span<const Observation> observations() const noexcept { return obs_; }
  std::size_t size() const noexcept { return obs_.size(); }
  bool empty() const noexcept { return obs_.empty(); }
  const Observation& operator[](std::size_t i) const noexcept { return obs_[i]; }

  std::size_t event_count() const noexcept;
  double censored_fraction() const noexcept;

  friend bool operator==(const CensoredSample&, const CensoredSample&) = default;

 private:
  std::vector<Observation> obs_;
};

/// Throws DomainError unless every value is finite and > 0. `what` prefixes
/// the message.
void require_positive(std::span<const double> values, const char* what);

}  // namespace rgof
