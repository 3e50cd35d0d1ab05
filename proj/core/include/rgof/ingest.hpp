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

#include <filesystem>
#include <istream>
#include <variant>

#include "rgof/sample.hpp"

namespace rgof {

/// CSV readers. Complete data: one numeric column. Censored data: two
/// columns time,status with status in {0, 1} (1 = event). A single leading
/// header line is detected when its first field is not numeric. Blank lines
/// are skipped. Throws ParseError naming the line for malformed rows,
/// nonpositive or non-finite times, and for input without data rows.
Sample read_complete(std::istream& in);
CensoredSample read_censored(std::istream& in);

/// File variants; a missing or unreadable file is a ParseError with line 0.
Sample ingest_complete(const std::filesystem::path& path);
CensoredSample ingest_censored(const std::filesystem::path& path);

std::variant<Sample, CensoredSample> ingest(const std::filesystem::path& path, bool censored);

}  // namespace rgof
