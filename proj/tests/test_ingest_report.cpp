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
#include <sstream>

#include <gtest/gtest.h>

#include "rgof/error.hpp"
#include "rgof/ingest.hpp"
#include "rgof/report.hpp"

namespace rgof {
namespace {

Sample complete(const std::string& text) {
  std::istringstream in(text);
  return read_complete(in);
}

CensoredSample censored(const std::string& text) {
  std::istringstream in(text);
  return read_censored(in);
}

std::size_t error_line(const std::string& text, bool is_censored) {
  try {
    is_censored ? (void)censored(text) : (void)complete(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

TEST(Ingest, BallBearingsFile) {
  const auto s = ingest_complete(std::string(RGOF_DATA_DIR) + "/ball_bearings.csv");
  EXPECT_EQ(s.size(), 25u);
  EXPECT_DOUBLE_EQ(s[0], 17.88);
}

TEST(Ingest, HeaderAndBlankLines) {
  EXPECT_EQ(complete("x\n1.5\n\n2\n").size(), 2u);
  EXPECT_EQ(complete("1.5\r\n2\r\n").size(), 2u);
  EXPECT_EQ(complete(" 3 \n+4\n1e-3\n").size(), 3u);
}

TEST(Ingest, Errors) {
  EXPECT_EQ(error_line("t\n1\n0\n", false), 3u);
  EXPECT_EQ(error_line("1\n-2\n", false), 2u);
  EXPECT_EQ(error_line("1\nabc\n", false), 2u);
  EXPECT_EQ(error_line("1\n2,1\n", false), 2u);
  EXPECT_EQ(error_line("1\ninf\n", false), 2u);
  EXPECT_EQ(error_line("", false), 0u);
  EXPECT_EQ(error_line("header only\n", false), 0u);
  EXPECT_EQ(error_line("time,status\n1,1\n2,2\n", true), 3u);
  EXPECT_EQ(error_line("1,1\n2\n", true), 2u);
  EXPECT_THROW(ingest_complete("/nonexistent/file.csv"), ParseError);
}

TEST(Ingest, CensoredAllEventsEqualsComplete) {
  const auto c = censored("time,status\n1.5,1\n2.5,1\n0.3,1\n");
  EXPECT_EQ(c, CensoredSample::uncensored(complete("1.5\n2.5\n0.3\n").values()));
  const auto d = censored("1,0\n2,1\n");
  EXPECT_FALSE(d[0].event);
  EXPECT_TRUE(d[1].event);
  EXPECT_DOUBLE_EQ(d.censored_fraction(), 0.5);
}

TEST(Report, JsonRoundTrip) {
  TestReport r;
  r.method = Method::kUstat;
  r.statistic = 0.48432391243620493;
  r.thresholds = {0.2007407, 0.777250123};
  r.p_value = 0.9035;
  r.reject = false;
  r.alpha = 0.05;
  r.n = 25;
  r.seed = 42;
  r.runtime_ms = 12;
  r.details = {{"sigma2_hat", 3201.774624}};
  const auto j = to_json(r);
  EXPECT_EQ(j["schema"], std::string(kReportSchema));
  EXPECT_EQ(j["decision"], "accept");
  EXPECT_EQ(report_from_json(j), r);
  EXPECT_EQ(report_from_json(nlohmann::json::parse(j.dump())), r);

  TestReport c;
  c.method = Method::kUstatCensored;
  c.statistic = 0.723;
  c.thresholds = {1.96};
  c.reject = true;
  c.n = 40;
  c.censored_fraction = 0.225;
  EXPECT_EQ(report_from_json(nlohmann::json::parse(to_json(c).dump())), c);
  EXPECT_FALSE(render_text(c).empty());
}

TEST(Report, RejectsBadDocuments) {
  TestReport r;
  auto j = to_json(r);
  j["schema"] = "gof-report/0";
  EXPECT_THROW(report_from_json(j), ParseError);
  j = to_json(r);
  j.erase("statistic");
  EXPECT_THROW(report_from_json(j), ParseError);
  j = to_json(r);
  j["method"] = "anderson";
  EXPECT_THROW(report_from_json(j), ParseError);
}

TEST(Report, MethodNames) {
  for (Method m : {Method::kUstat, Method::kUstatCensored, Method::kJel, Method::kKs, Method::kCvm}) {
    EXPECT_EQ(parse_method(method_name(m)), m);
  }
  EXPECT_EQ(parse_method("JEL"), Method::kJel);
  EXPECT_THROW(parse_method("ad"), ConfigError);
}

}  // namespace
}  // namespace rgof
