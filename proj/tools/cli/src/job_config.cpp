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

#include "quadmap_cli/job_config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "quadmap/error.hpp"

namespace quadmap::cli {
namespace {

using nlohmann::json;

constexpr std::string_view kKeys[] = {"vertices",    "scheme", "pairing",           "scaled_pole_override",
                                      "eval_points", "grid",   "quadrature_points", "output_format"};

int line_at(std::string_view text, size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// Line of the first occurrence of "key"; 0 if it does not appear.
int line_of_key(std::string_view text, std::string_view key) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  const size_t pos = text.find(quoted);
  return pos == std::string_view::npos ? 0 : line_at(text, pos);
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(std::string_view field, const std::string& what) const {
    const int line = line_of_key(text_, field);
    throw ParseError(std::string(field), line,
                     "field \"" + std::string(field) + "\"" + (line > 0 ? " (line " + std::to_string(line) + ")" : "") +
                         ": " + what);
  }

  double number(const json& v, std::string_view field) const {
    if (!v.is_number()) fail(field, "expected a number, got " + std::string(v.type_name()));
    return v.get<double>();
  }

  std::array<double, 2> pair(const json& v, std::string_view field) const {
    if (!v.is_array() || v.size() != 2) fail(field, "expected a pair [a, b]");
    return {number(v[0], field), number(v[1], field)};
  }

  std::string string(const json& v, std::string_view field) const {
    if (!v.is_string()) fail(field, "expected a string, got " + std::string(v.type_name()));
    return v.get<std::string>();
  }

  int integer(const json& v, std::string_view field) const {
    if (!v.is_number_integer()) fail(field, "expected an integer");
    return v.get<int>();
  }

 private:
  std::string_view text_;
};

}  // namespace

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kTable: return "table";
  }
  return "table";
}

std::optional<OutputFormat> output_format_from_string(std::string_view name) {
  for (OutputFormat f : {OutputFormat::kJson, OutputFormat::kCsv, OutputFormat::kTable}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

JobConfig parse_job(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const int line = line_at(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("", line, "malformed document at line " + std::to_string(line) + ": " + e.what());
  }
  const Reader r(text);
  if (!doc.is_object()) throw ParseError("", 1, "top level must be an object");

  for (const auto& [key, value] : doc.items()) {
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) r.fail(key, "unknown key");
  }

  JobConfig job;
  if (!doc.contains("vertices")) throw ParseError("vertices", 0, "missing required field \"vertices\"");
  const json& v = doc["vertices"];
  if (!v.is_array() || v.size() != 4) r.fail("vertices", "expected 4 coordinate pairs");
  for (int k = 0; k < 4; ++k) {
    const auto p = r.pair(v[k], "vertices");
    job.vertices[k] = {p[0], p[1]};
  }

  if (doc.contains("scheme")) {
    const auto s = scheme_from_string(r.string(doc["scheme"], "scheme"));
    if (!s) r.fail("scheme", "expected lagrange4, pascal6 or pascal10");
    job.scheme = *s;
  }
  if (doc.contains("pairing")) {
    const auto p = pairing_from_string(r.string(doc["pairing"], "pairing"));
    if (!p) r.fail("pairing", "expected text-order or swapped");
    job.pairing = *p;
  }
  if (doc.contains("scaled_pole_override") && !doc["scaled_pole_override"].is_null()) {
    const auto p = r.pair(doc["scaled_pole_override"], "scaled_pole_override");
    job.scaled_pole_override = std::pair{p[0], p[1]};
  }
  if (doc.contains("eval_points")) {
    const json& pts = doc["eval_points"];
    if (!pts.is_array()) r.fail("eval_points", "expected a list of pairs");
    for (const json& p : pts) job.eval_points.push_back(r.pair(p, "eval_points"));
  }
  if (doc.contains("grid") && !doc["grid"].is_null()) {
    job.grid = r.integer(doc["grid"], "grid");
    if (*job.grid < 2) r.fail("grid", "must be at least 2");
  }
  if (doc.contains("quadrature_points")) {
    job.quadrature_points = r.integer(doc["quadrature_points"], "quadrature_points");
    if (job.quadrature_points < 2 || job.quadrature_points > 4) r.fail("quadrature_points", "supported: 2, 3, 4");
  }
  if (doc.contains("output_format")) {
    const auto f = output_format_from_string(r.string(doc["output_format"], "output_format"));
    if (!f) r.fail("output_format", "expected json, csv or table");
    job.output_format = *f;
  }
  return job;
}

JobConfig read_job(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("input", 0, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_job(buf.str());
}

}  // namespace quadmap::cli
