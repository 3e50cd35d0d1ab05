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

#include "rgof/ingest.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rgof/error.hpp"

namespace rgof {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::optional<double> to_number(std::string_view field) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) return std::nullopt;
  return v;
}

// Calls row(fields, line_no) for every data row.
template <class Row>
void scan(std::istream& in, std::size_t columns, Row row) {
  std::string line;
  std::size_t line_no = 0;
  bool seen_first = false;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty()) continue;
    const auto fields = split(body);
    if (!seen_first) {
      seen_first = true;
      if (!to_number(fields.front())) continue;  // header
    }
    if (fields.size() != columns) {
      throw ParseError("expected " + std::to_string(columns) + " column(s), found " + std::to_string(fields.size()),
                       line_no);
    }
    row(fields, line_no);
    ++rows;
  }
  if (rows == 0) throw ParseError("no data rows", 0);
}

double parse_time(std::string_view field, std::size_t line_no) {
  const auto v = to_number(field);
  if (!v) throw ParseError("not a number: '" + std::string(field) + "'", line_no);
  if (!std::isfinite(*v) || *v <= 0.0) {
    throw ParseError("lifetime must be positive and finite, got " + std::string(field), line_no);
  }
  return *v;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  return in;
}

}  // namespace

Sample read_complete(std::istream& in) {
  std::vector<double> values;
  scan(in, 1, [&](const auto& f, std::size_t line_no) { values.push_back(parse_time(f[0], line_no)); });
  return Sample(std::move(values));
}

CensoredSample read_censored(std::istream& in) {
  std::vector<Observation> obs;
  scan(in, 2, [&](const auto& f, std::size_t line_no) {
    const double t = parse_time(f[0], line_no);
    const auto s = to_number(f[1]);
    if (!s || (*s != 0.0 && *s != 1.0)) {
      throw ParseError("status must be 0 or 1, got '" + std::string(f[1]) + "'", line_no);
    }
    obs.push_back({t, *s == 1.0});
  });
  return CensoredSample(std::move(obs));
}

Sample ingest_complete(const std::filesystem::path& path) {
  auto in = open(path);
  return read_complete(in);
}

CensoredSample ingest_censored(const std::filesystem::path& path) {
  auto in = open(path);
  return read_censored(in);
}

std::variant<Sample, CensoredSample> ingest(const std::filesystem::path& path, bool censored) {
  if (censored) return ingest_censored(path);
  return ingest_complete(path);
}

}  // namespace rgof
