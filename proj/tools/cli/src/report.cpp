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

#include "quadmap_cli/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace quadmap::cli {
namespace {

using nlohmann::ordered_json;

ordered_json to_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
          return v;
        } else {
          return v;
        }
      },
      c);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_real(v);
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else {
          return csv_escape(v);
        }
      },
      c);
}

std::string table_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "-";
        } else if constexpr (std::is_same_v<T, double>) {
          if (std::abs(v) >= 1e12) return fmt::format("{:.8e}", v);
          return fmt::format("{:.8f}", v);
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else {
          return v;
        }
      },
      c);
}

void write_json(const Report& r, std::ostream& out) {
  ordered_json doc;
  doc["command"] = r.command;
  for (const auto& [k, v] : r.meta) doc[k] = to_json(v);
  ordered_json tables = ordered_json::object();
  for (const Table& t : r.tables) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : t.rows) {
      ordered_json jr = ordered_json::array();
      for (const Cell& c : row) jr.push_back(to_json(c));
      rows.push_back(std::move(jr));
    }
    tables[t.name] = {{"columns", t.columns}, {"rows", std::move(rows)}};
  }
  doc["tables"] = std::move(tables);
  out << doc.dump(2) << '\n';
}

void write_csv(const Report& r, std::ostream& out) {
  out << "# command," << r.command << '\n';
  for (const auto& [k, v] : r.meta) out << "# " << k << ',' << csv_cell(v) << '\n';
  for (const Table& t : r.tables) {
    out << "\n# " << t.name << '\n';
    for (size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << csv_escape(t.columns[c]);
    out << '\n';
    for (const auto& row : t.rows) {
      for (size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_cell(row[c]);
      out << '\n';
    }
  }
}

void write_table(const Report& r, std::ostream& out) {
  out << r.command << '\n';
  size_t key_width = 0;
  for (const auto& kv : r.meta) key_width = std::max(key_width, kv.first.size());
  for (const auto& [k, v] : r.meta) out << fmt::format("  {:<{}}  {}\n", k, key_width, table_cell(v));
  for (const Table& t : r.tables) {
    std::vector<std::vector<std::string>> text;
    std::vector<size_t> width(t.columns.size());
    for (size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
    for (const auto& row : t.rows) {
      auto& line = text.emplace_back();
      for (size_t c = 0; c < row.size(); ++c) {
        line.push_back(table_cell(row[c]));
        width[c] = std::max(width[c], line.back().size());
      }
    }
    out << '\n' << t.name << '\n';
    for (size_t c = 0; c < t.columns.size(); ++c) out << fmt::format("{}{:>{}}", c ? "  " : "", t.columns[c], width[c]);
    out << '\n';
    for (const auto& line : text) {
      for (size_t c = 0; c < line.size(); ++c) out << fmt::format("{}{:>{}}", c ? "  " : "", line[c], width[c]);
      out << '\n';
    }
  }
}

}  // namespace

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

void write_report(const Report& report, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::kJson: write_json(report, out); break;
    case OutputFormat::kCsv: write_csv(report, out); break;
    case OutputFormat::kTable: write_table(report, out); break;
  }
}

}  // namespace quadmap::cli
