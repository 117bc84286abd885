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

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "quadmap_cli/job_config.hpp"
#include "quadmap_cli/report.hpp"

namespace quadmap::cli {

enum ExitCode : int { kExitOk = 0, kExitDomainError = 1, kExitUsage = 2 };

// Command-line values that take precedence over the job file.
struct Overrides {
  std::optional<Scheme> scheme;
  std::optional<Pairing> pairing;
  std::optional<std::pair<double, double>> scaled_pole_override;
  std::vector<std::array<double, 2>> at;
  std::optional<int> grid;
  std::optional<int> quadrature_points;
  std::optional<OutputFormat> format;
};

JobConfig apply(JobConfig job, const Overrides& o);

// Each builder throws quadmap::Error on domain failures. Warnings go to err.
Report poles_report(const JobConfig& job);
Report fit_report(const JobConfig& job, std::ostream& err);
Report eval_report(const JobConfig& job, std::ostream& err);
Report invert_report(const JobConfig& job, std::ostream& err);
Report geometry_report(const JobConfig& job, std::ostream& err);
Report area_report(const JobConfig& job, std::ostream& err);
Report compare_report(const JobConfig& job, std::ostream& err);

// Column names of the geometry table after t1, t2.
std::vector<std::string> geometry_columns();

// Full command line including the program name. Data goes to out;
// diagnostics and the error record go to err.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace quadmap::cli
