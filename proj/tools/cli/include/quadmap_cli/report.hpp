// Copyright 2026 The quadmap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "quadmap_cli/job_config.hpp"

namespace quadmap::cli {

// monostate prints as null / empty / "-".
using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, Cell>> meta;
  std::vector<Table> tables;
};

// json: one object {"command", meta keys..., "tables": {name: {columns, rows}}}.
// csv: "# key,value" meta lines, then per table "# name", a header and rows.
// table: aligned columns, reals with 8 decimals.
void write_report(const Report& report, OutputFormat format, std::ostream& out);

// 17 significant digits; round-trips through strtod.
std::string format_real(double v);

}  // namespace quadmap::cli
