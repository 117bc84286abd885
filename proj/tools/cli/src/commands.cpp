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

#include "quadmap_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "quadmap/quadmap.hpp"

namespace quadmap::cli {
namespace {

constexpr int kDefaultCompareGrid = 21;

std::string monomial_label(Monomial m) {
  const auto power = [](const char* var, int e) -> std::string {
    if (e == 0) return "";
    return e == 1 ? var : std::string(var) + "^" + std::to_string(e);
  };
  const std::string a = power("t1", m.i), b = power("t2", m.j);
  if (a.empty() && b.empty()) return "1";
  if (a.empty() || b.empty()) return a + b;
  return a + "*" + b;
}

Cell opt(const std::optional<double>& v) { return v ? Cell(*v) : Cell(); }

FittedMap fit_job(const JobConfig& job, Scheme scheme, std::ostream& err) {
  const Quad q = validate_quad(job.vertices);
  FittedMap m = fit_map(q, BasisSpec(scheme), FitOptions{job.pairing, job.scaled_pole_override, true});
  for (const std::string& w : m.warnings()) err << "warning: " << w << '\n';
  return m;
}

void add_fit_meta(Report& r, const FittedMap& m) {
  r.meta.emplace_back("scheme", std::string(to_string(m.spec().scheme())));
  r.meta.emplace_back("pairing", std::string(to_string(m.pairing())));
}

std::vector<NaturalPoint> grid_points(int n) {
  std::vector<NaturalPoint> pts;
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) pts.push_back({-1.0 + 2.0 * a / (n - 1), -1.0 + 2.0 * b / (n - 1)});
  }
  return pts;
}

// Explicit points first, then the grid (t1 varies fastest).
std::vector<NaturalPoint> natural_points(const JobConfig& job) {
  std::vector<NaturalPoint> pts;
  for (const auto& p : job.eval_points) pts.push_back({p[0], p[1]});
  if (job.grid) {
    const auto g = grid_points(*job.grid);
    pts.insert(pts.end(), g.begin(), g.end());
  }
  if (pts.empty()) throw Error(ErrorKind::kInvalidArgument, "no evaluation points: give eval_points, --at or a grid");
  return pts;
}

std::string error_record(const std::exception& e) {
  nlohmann::ordered_json rec;
  const auto* qe = dynamic_cast<const Error*>(&e);
  rec["error"] = qe ? std::string(to_string(qe->kind())) : "Internal";
  rec["message"] = e.what();
  if (const auto* d = dynamic_cast<const DegenerateQuadError*>(&e)) rec["reason"] = std::string(to_string(d->reason()));
  if (const auto* s = dynamic_cast<const SingularSystemError*>(&e)) {
    rec["cond_estimate"] = std::isinf(s->cond_estimate()) ? nlohmann::ordered_json("inf")
                                                           : nlohmann::ordered_json(s->cond_estimate());
  }
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
    rec["field"] = p->field();
    rec["line"] = p->line();
  }
  return rec.dump();
}

std::optional<std::array<double, 2>> parse_pair(const std::string& s) {
  const size_t comma = s.find(',');
  if (comma == std::string::npos) return std::nullopt;
  try {
    size_t used_a = 0, used_b = 0;
    const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
    const double x = std::stod(a, &used_a), y = std::stod(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) return std::nullopt;
    return std::array<double, 2>{x, y};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

JobConfig apply(JobConfig job, const Overrides& o) {
  if (o.scheme) job.scheme = *o.scheme;
  if (o.pairing) job.pairing = *o.pairing;
  if (o.scaled_pole_override) job.scaled_pole_override = o.scaled_pole_override;
  if (!o.at.empty()) job.eval_points = o.at;
  if (o.grid) job.grid = o.grid;
  if (o.quadrature_points) job.quadrature_points = *o.quadrature_points;
  if (o.format) job.output_format = *o.format;
  return job;
}

Report poles_report(const JobConfig& job) {
  const Quad q = validate_quad(job.vertices);
  const PoleSet poles = compute_poles(q);
  const ScaledPoles sp = scaled_pole_coordinates(midpoint_frame(q), poles);
  Report r{"poles", {}, {}};
  Table t{"poles", {"pole", "kind", "x1", "x2", "direction_x1", "direction_x2", "scaled", "source"}, {}};
  const auto add = [&](std::int64_t id, const Pole& p, std::optional<double> computed, std::optional<double> forced) {
    std::vector<Cell> row{id};
    if (const auto* pt = std::get_if<Point2>(&p)) {
      row.insert(row.end(), {std::string("finite"), pt->x1, pt->x2, Cell(), Cell()});
    } else {
      const Vec2 d = std::get<AtInfinity>(p).direction;
      row.insert(row.end(), {std::string("at-infinity"), Cell(), Cell(), d.x1, d.x2});
    }
    if (computed && forced) {
      row.insert(row.end(), {*forced, std::string("override")});
    } else {
      row.insert(row.end(), {opt(computed), std::string("computed")});
    }
    t.rows.push_back(std::move(row));
  };
  const auto& ov = job.scaled_pole_override;
  add(5, poles.pole5, sp.t5, ov ? std::optional(ov->first) : std::nullopt);
  add(6, poles.pole6, sp.t6, ov ? std::optional(ov->second) : std::nullopt);
  r.tables.push_back(std::move(t));
  return r;
}

Report fit_report(const JobConfig& job, std::ostream& err) {
  const FittedMap m = fit_job(job, job.scheme, err);
  Report r{"fit", {}, {}};
  add_fit_meta(r, m);
  r.meta.emplace_back("t5", opt(m.scaled().t5));
  r.meta.emplace_back("t6", opt(m.scaled().t6));
  r.meta.emplace_back("scaled_source", std::string(to_string(m.scaled().source)));
  r.meta.emplace_back("cond_estimate", m.cond_estimate());
  std::string dropped;
  for (int k : m.dropped()) dropped += (dropped.empty() ? "" : " ") + monomial_label(m.spec().exponents()[k]);
  r.meta.emplace_back("dropped", dropped);

  Table params{"params", {"monomial", "x1", "x2"}, {}};
  for (int k = 0; k < m.spec().size(); ++k) {
    params.rows.push_back({monomial_label(m.spec().exponents()[k]), m.params()(k, 0), m.params()(k, 1)});
  }
  Table nodes{"nodes", {"node", "t1", "t2", "x1", "x2"}, {}};
  for (size_t k = 0; k < m.nodes().size(); ++k) {
    const NodeRow& n = m.nodes()[k];
    nodes.rows.push_back({std::int64_t{node_number(n.id)}, n.at.t1, n.at.t2, m.node_positions()[k].x1,
                          m.node_positions()[k].x2});
  }
  r.tables.push_back(std::move(params));
  r.tables.push_back(std::move(nodes));
  return r;
}

Report eval_report(const JobConfig& job, std::ostream& err) {
  const FittedMap m = fit_job(job, job.scheme, err);
  Report r{"eval", {}, {}};
  add_fit_meta(r, m);
  Table t{"points", {"t1", "t2", "x1", "x2"}, {}};
  for (NaturalPoint p : natural_points(job)) {
    const Point2 x = map_point(m, p);
    t.rows.push_back({p.t1, p.t2, x.x1, x.x2});
  }
  r.tables.push_back(std::move(t));
  return r;
}

Report invert_report(const JobConfig& job, std::ostream& err) {
  const FittedMap m = fit_job(job, job.scheme, err);
  if (job.eval_points.empty()) throw Error(ErrorKind::kInvalidArgument, "no target points: give eval_points or --at");
  Report r{"invert", {}, {}};
  add_fit_meta(r, m);
  Table t{"inverse", {"x1", "x2", "t1", "t2", "iterations", "residual"}, {}};
  for (const auto& x : job.eval_points) {
    const InverseResult inv = inverse_map(m, {x[0], x[1]});
    t.rows.push_back({x[0], x[1], inv.point.t1, inv.point.t2, std::int64_t{inv.iterations}, inv.residual});
  }
  r.tables.push_back(std::move(t));
  return r;
}

std::vector<std::string> geometry_columns() {
  std::vector<std::string> c = {"x1", "x2"};
  for (int a = 1; a <= 2; ++a) {
    for (int i = 1; i <= 2; ++i) c.push_back(fmt::format("g{}.x{}", a, i));
  }
  // d g_alpha / d t^beta, alpha fastest.
  for (int b = 1; b <= 2; ++b) {
    for (int a = 1; a <= 2; ++a) {
      for (int i = 1; i <= 2; ++i) c.push_back(fmt::format("g{},{}.x{}", a, b, i));
    }
  }
  for (const char* s : {"g11", "g12", "g22", "g^11", "g^12", "g^22"}) c.emplace_back(s);
  for (int a = 1; a <= 2; ++a) {
    for (int i = 1; i <= 2; ++i) c.push_back(fmt::format("g^{}.x{}", a, i));
  }
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      for (int g = 1; g <= 2; ++g) c.push_back(fmt::format("G_{}{}{}", a, b, g));
    }
  }
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      for (int g = 1; g <= 2; ++g) c.push_back(fmt::format("G^{}_{}{}", g, a, b));
    }
  }
  c.emplace_back("jac_det");
  return c;
}

Report geometry_report(const JobConfig& job, std::ostream& err) {
  const FittedMap m = fit_job(job, job.scheme, err);
  Report r{"geometry", {}, {}};
  add_fit_meta(r, m);
  Table t{"geometry", {"t1", "t2"}, {}};
  const auto cols = geometry_columns();
  t.columns.insert(t.columns.end(), cols.begin(), cols.end());
  t.columns.emplace_back("gauss_residual");
  for (NaturalPoint p : natural_points(job)) {
    const GeometryState s = geometry_state(m, p);
    std::vector<Cell> row{p.t1, p.t2, s.position.x1, s.position.x2};
    const auto vec = [&row](Vec2 v) { row.insert(row.end(), {v.x1, v.x2}); };
    for (Vec2 g : s.g_cov) vec(g);
    for (Vec2 g : s.g_der) vec(g);
    row.insert(row.end(), {s.metric[0][0], s.metric[0][1], s.metric[1][1]});
    row.insert(row.end(), {s.metric_inv[0][0], s.metric_inv[0][1], s.metric_inv[1][1]});
    for (Vec2 g : s.g_contra) vec(g);
    for (const Christoffel* gamma : {&s.gamma1, &s.gamma2}) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) row.insert(row.end(), {(*gamma)[a][b][0], (*gamma)[a][b][1]});
      }
    }
    row.emplace_back(s.jac_det);
    row.emplace_back(verify_gauss_relations(s));
    t.rows.push_back(std::move(row));
  }
  r.tables.push_back(std::move(t));
  return r;
}

Report area_report(const JobConfig& job, std::ostream& err) {
  const FittedMap m = fit_job(job, job.scheme, err);
  Report r{"area", {}, {}};
  add_fit_meta(r, m);
  const double center = geometry_state(m, {0.0, 0.0}).jac_det;
  Table t{"area",
          {"shoelace_area", "center_jac_det", "four_center_jac_det", "jacobian_integral", "quadrature_points"},
          {{shoelace_area(m.quad()), center, 4.0 * center, integrate_jacobian(m, job.quadrature_points),
            std::int64_t{job.quadrature_points}}}};
  r.tables.push_back(std::move(t));
  return r;
}

Report compare_report(const JobConfig& job, std::ostream& err) {
  const Scheme pascal_scheme = job.scheme == Scheme::kLagrange4 ? Scheme::kPascal6 : job.scheme;
  const FittedMap pascal = fit_job(job, pascal_scheme, err);
  const FittedMap lagrange = fit_job(job, Scheme::kLagrange4, err);
  const int n = job.grid.value_or(kDefaultCompareGrid);

  Report r{"compare", {}, {}};
  r.meta.emplace_back("pascal_scheme", std::string(to_string(pascal_scheme)));
  r.meta.emplace_back("pairing", std::string(to_string(pascal.pairing())));
  Table params{"params", {"monomial", "pascal_x1", "pascal_x2", "lagrange_x1", "lagrange_x2"}, {}};
  for (int k = 0; k < pascal.spec().size(); ++k) {
    const Monomial mono = pascal.spec().exponents()[k];
    const int l = lagrange.spec().index_of(mono);
    params.rows.push_back({monomial_label(mono), pascal.params()(k, 0), pascal.params()(k, 1),
                           l >= 0 ? Cell(lagrange.params()(l, 0)) : Cell(), l >= 0 ? Cell(lagrange.params()(l, 1)) : Cell()});
  }
  // Monomials only in the Lagrange set (none for the Pascal schemes, kept for completeness).
  for (int l = 0; l < lagrange.spec().size(); ++l) {
    const Monomial mono = lagrange.spec().exponents()[l];
    if (pascal.spec().index_of(mono) < 0) {
      params.rows.push_back({monomial_label(mono), Cell(), Cell(), lagrange.params()(l, 0), lagrange.params()(l, 1)});
    }
  }

  double worst = -1.0;
  NaturalPoint at{0.0, 0.0};
  for (NaturalPoint p : grid_points(n)) {
    const Vec2 d = map_point(pascal, p) - map_point(lagrange, p);
    const double dist = norm(d);
    if (dist > worst) {
      worst = dist;
      at = p;
    }
  }
  r.meta.emplace_back("grid", std::int64_t{n});
  r.meta.emplace_back("max_discrepancy", worst);
  r.meta.emplace_back("max_at_t1", at.t1);
  r.meta.emplace_back("max_at_t2", at.t2);
  r.tables.push_back(std::move(params));
  return r;
}

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pascal and Lagrange interpolation maps for straight-edged quadrilaterals", "quadmap"};
  app.require_subcommand(1);

  std::string input, scheme, pairing, format, override_text;
  std::vector<std::string> at;
  std::optional<int> grid, quad_points;
  const char* names[][2] = {
      {"poles", "Pole coordinates and scaled natural values"},
      {"fit", "Parameter matrix, condition estimate and dropped terms"},
      {"eval", "Map natural points (or an N x N grid) to Cartesian"},
      {"invert", "Newton-invert Cartesian points"},
      {"geometry", "Covariant bases, metric, Christoffel symbols, Jacobian"},
      {"area", "Shoelace area against the integrated Jacobian"},
      {"compare", "Pascal vs Lagrange parameters and grid discrepancy"},
  };
  for (const auto& [name, help] : names) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", input, "Job file")->required();
    sub->add_option("--scheme", scheme, "lagrange4 | pascal6 | pascal10")
        ->check(CLI::IsMember({"lagrange4", "pascal6", "pascal10"}));
    sub->add_option("--pairing", pairing, "text-order | swapped")->check(CLI::IsMember({"text-order", "swapped"}));
    sub->add_option("--at", at, "Points as a,b (natural; Cartesian for invert)")->expected(1, -1);
    sub->add_option("--grid", grid, "N x N grid over [-1,1]^2")->check(CLI::Range(2, 10000));
    sub->add_option("--quad-points", quad_points, "Gauss points per axis")->check(CLI::IsMember({2, 3, 4}));
    sub->add_option("--format", format, "json | csv | table")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--override", override_text, "Scaled pole values t5,t6");
  }

  std::vector<const char*> args;
  for (const std::string& a : argv) args.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  Overrides o;
  for (const std::string& a : at) {
    const auto p = parse_pair(a);
    if (!p) {
      err << "usage error: --at expects a,b but got '" << a << "'\n";
      return kExitUsage;
    }
    o.at.push_back(*p);
  }
  if (!override_text.empty()) {
    const auto p = parse_pair(override_text);
    if (!p) {
      err << "usage error: --override expects t5,t6 but got '" << override_text << "'\n";
      return kExitUsage;
    }
    o.scaled_pole_override = std::pair{(*p)[0], (*p)[1]};
  }
  if (!scheme.empty()) o.scheme = scheme_from_string(scheme);
  if (!pairing.empty()) o.pairing = pairing_from_string(pairing);
  if (!format.empty()) o.format = output_format_from_string(format);
  o.grid = grid;
  o.quadrature_points = quad_points;

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const JobConfig job = apply(read_job(input), o);
    Report report;
    if (command == "poles") report = poles_report(job);
    else if (command == "fit") report = fit_report(job, err);
    else if (command == "eval") report = eval_report(job, err);
    else if (command == "invert") report = invert_report(job, err);
    else if (command == "geometry") report = geometry_report(job, err);
    else if (command == "area") report = area_report(job, err);
    else report = compare_report(job, err);
    std::ostringstream buf;
    write_report(report, job.output_format, buf);
    out << buf.str();
    return kExitOk;
  } catch (const std::exception& e) {
    err << error_record(e) << '\n';
    return kExitDomainError;
  }
}

}  // namespace quadmap::cli
