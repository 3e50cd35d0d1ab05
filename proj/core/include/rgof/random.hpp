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
#include <random>

namespace rgof {

/// Mixes a 64-bit value (splitmix64 finalizer).
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Caller-owned random stream. Not shared across threads: parallel code
/// derives one stream per replicate with `Stream::derive`, so results do not
/// depend on how replicates are scheduled.
class Stream {
 public:
  using engine_type = std::mt19937_64;

  explicit Stream(std::uint64_t seed);

  /// Independent stream for replicate `index` of purpose `tag` under `seed`.
  static Stream derive(std::uint64_t seed, std::uint64_t tag, std::uint64_t index);

  /// Uniform on [0, 1) with 53 random bits; never returns 1.
  double uniform() noexcept;

  /// Standard normal variate.
  double normal();

  engine_type& engine() noexcept { return engine_; }

 private:
  engine_type engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace rgof
