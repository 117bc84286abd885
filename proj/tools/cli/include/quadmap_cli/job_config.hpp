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

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quadmap/map_fitting.hpp"
#include "quadmap/planar_geometry.hpp"
#include "quadmap/polynomial_basis.hpp"

namespace quadmap::cli {

enum class OutputFormat { kJson, kCsv, kTable };

std::string_view to_string(OutputFormat format);
std::optional<OutputFormat> output_format_from_string(std::string_view name);

// One job file. Absent optional keys take the defaults below.
struct JobConfig {
  std::array<Point2, 4> vertices{};
  Scheme scheme = Scheme::kPascal6;
  Pairing pairing = Pairing::kTextOrder;
  std::optional<std::pair<double, double>> scaled_pole_override;
  // Natural points for eval/geometry, Cartesian targets for invert.
  std::vector<std::array<double, 2>> eval_points;
  std::optional<int> grid;  // >= 2
  int quadrature_points = 2;
  OutputFormat output_format = OutputFormat::kTable;
};

// Throws ParseError naming the offending field and its 1-based line.
JobConfig parse_job(std::string_view text);
JobConfig read_job(const std::filesystem::path& path);

}  // namespace quadmap::cli
