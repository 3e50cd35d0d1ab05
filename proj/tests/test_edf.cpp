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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "rgof/edf.hpp"
#include "rgof/error.hpp"
#include "rgof/rayleigh.hpp"

namespace rgof {
namespace {

TEST(Ks, SingleObservationAtMedian) {
  const auto p = RayleighParam::standard();
  const std::vector<double> x{rayleigh_quantile(0.5, p)};
  EXPECT_NEAR(ks_statistic(x, p).value, 0.5, 1e-15);
  EXPECT_EQ(ks_statistic(x, p).kind, EdfKind::kKs);
}

TEST(Ks, Grid) {
  EXPECT_NEAR(ks_from_uniforms(std::vector<double>{0.25, 0.5, 0.75}), 0.25, 1e-15);
  EXPECT_NEAR(ks_from_uniforms(std::vector<double>{0.1, 0.3, 0.5, 0.7, 0.9}), 0.1, 1e-15);
}

TEST(Cvm, HandValues) {
  EXPECT_NEAR(cvm_from_uniforms(std::vector<double>{0.5}), 1.0 / 12.0, 1e-15);
  EXPECT_NEAR(cvm_from_uniforms(std::vector<double>{0.9, 0.1}), 0.086666666666667, 1e-12);
  EXPECT_NEAR(cvm_from_uniforms(std::vector<double>{0.125, 0.375, 0.625, 0.875}), 1.0 / 48.0, 1e-15);
}

TEST(Edf, FittedStatisticsAreScaleInvariant) {
  Stream s(2);
  std::vector<double> x(60);
  rayleigh_fill(x, RayleighParam(3.0), s);
  for (EdfKind kind : {EdfKind::kKs, EdfKind::kCvm}) {
    const double base = edf_fitted(kind, x);
    for (double c : {1e-3, 1e3}) {
      std::vector<double> y(x);
      for (double& v : y) v *= c;
      EXPECT_NEAR(edf_fitted(kind, y), base, 1e-10) << edf_name(kind);
    }
  }
}

TEST(Edf, Ranges) {
  Stream s(3);
  std::vector<double> x(30);
  rayleigh_fill(x, RayleighParam::standard(), s);
  const double ks = ks_statistic(x, RayleighParam::standard()).value;
  EXPECT_GE(ks, 1.0 / 60.0);
  EXPECT_LE(ks, 1.0);
  EXPECT_GE(cvm_statistic(x, RayleighParam::standard()).value, 1.0 / 360.0);
  EXPECT_THROW(ks_from_uniforms(std::vector<double>{}), DomainError);
  EXPECT_THROW(ks_statistic(std::vector<double>{-1.0}, RayleighParam::standard()), DomainError);
}

}  // namespace
}  // namespace rgof
