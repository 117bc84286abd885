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

#include "quadmap/differential_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <sstream>
#include <vector>

#include "quadmap/error.hpp"

namespace quadmap {

namespace {

struct GaussRule {
  std::span<const double> nodes;
  std::span<const double> weights;
};

// Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kNodes2[] = {-0.57735026918962576451, 0.57735026918962576451};
constexpr double kWeights2[] = {1.0, 1.0};
constexpr double kNodes3[] = {-0.77459666924148337704, 0.0, 0.77459666924148337704};
constexpr double kWeights3[] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
constexpr double kNodes4[] = {-0.86113631159405257522, -0.33998104358485626480,
                              0.33998104358485626480, 0.86113631159405257522};
constexpr double kWeights4[] = {0.34785484513745385737, 0.65214515486254614263,
                                0.65214515486254614263, 0.34785484513745385737};

GaussRule gauss_rule(int points) {
  switch (points) {
    case 2: return {kNodes2, kWeights2};
    case 3: return {kNodes3, kWeights3};
    case 4: return {kNodes4, kWeights4};
    default:
      throw Error(ErrorKind::kInvalidArgument,
                  "integrate_jacobian: points_per_axis must be 2, 3 or 4, got " + std::to_string(points));
  }
}

Vec2 contract(const std::vector<double>& row, const Matrix& params) {
  Vec2 out;
  for (int k = 0; k < params.rows(); ++k) {
    out.x1 += row[k] * params(k, 0);
    out.x2 += row[k] * params(k, 1);
  }
  return out;
}

double determinant(const std::array<Vec2, 2>& rows) { return cross(rows[0], rows[1]); }

double inf_norm(Vec2 v) { return std::max(std::abs(v.x1), std::abs(v.x2)); }

}  // namespace

Point2 map_point(const FittedMap& m, NaturalPoint p) { return contract(basis_row(m.spec(), p), m.params()); }

std::array<Vec2, 2> covariant_basis(const FittedMap& m, NaturalPoint p) {
  const auto grad = basis_gradient(m.spec(), p);
  return {contract(grad[0], m.params()), contract(grad[1], m.params())};
}

std::array<Vec2, 4> basis_derivatives(const FittedMap& m, NaturalPoint p) {
  const auto second = basis_second_derivatives(m.spec(), p);
  return {contract(second[0], m.params()), contract(second[1], m.params()),
          contract(second[2], m.params()), contract(second[3], m.params())};
}

GeometryState geometry_state(const FittedMap& m, NaturalPoint p) {
  GeometryState s{};
  s.at = p;
  s.position = map_point(m, p);
  s.g_cov = covariant_basis(m, p);
  s.g_der = basis_derivatives(m, p);
  s.jac_det = determinant(s.g_cov);

  const double diameter = m.quad().diameter();
  if (!(std::abs(s.jac_det) >= 1e-12 * diameter * diameter)) {
    std::ostringstream os;
    os << "geometry_state: singular Jacobian (det = " << s.jac_det << ") at (" << p.t1 << ", " << p.t2 << ")";
    throw Error(ErrorKind::kSingularJacobian, os.str());
  }

  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) s.metric[a][b] = dot(s.g_cov[a], s.g_cov[b]);
  }
  const double metric_det = s.metric[0][0] * s.metric[1][1] - s.metric[0][1] * s.metric[1][0];
  s.metric_inv = {{{s.metric[1][1] / metric_det, -s.metric[0][1] / metric_det},
                   {-s.metric[1][0] / metric_det, s.metric[0][0] / metric_det}}};

  for (int a = 0; a < 2; ++a) {
    s.g_contra[a] = s.metric_inv[a][0] * s.g_cov[0] + s.metric_inv[a][1] * s.g_cov[1];
  }

  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const Vec2 d = s.derivative(a, b);
      for (int c = 0; c < 2; ++c) {
        s.gamma1[a][b][c] = dot(d, s.g_cov[c]);
        s.gamma2[a][b][c] = dot(d, s.g_contra[c]);
      }
    }
  }
  return s;
}

double verify_gauss_relations(const GeometryState& s) {
  double worst = 0.0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const Vec2 d = s.derivative(a, b);
      Vec2 via_first;
      Vec2 via_second;
      for (int c = 0; c < 2; ++c) {
        via_first = via_first + s.gamma1[a][b][c] * s.g_contra[c];
        via_second = via_second + s.gamma2[a][b][c] * s.g_cov[c];
      }
      worst = std::max({worst, inf_norm(d - via_first), inf_norm(d - via_second)});
    }
  }
  return worst;
}

double integrate_jacobian(const FittedMap& m, int points_per_axis) {
  const GaussRule rule = gauss_rule(points_per_axis);
  double sum = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    for (size_t j = 0; j < rule.nodes.size(); ++j) {
      const NaturalPoint p{rule.nodes[i], rule.nodes[j]};
      sum += rule.weights[i] * rule.weights[j] * determinant(covariant_basis(m, p));
    }
  }
  return sum;
}

InverseResult inverse_map(const FittedMap& m, Point2 x, NaturalPoint guess) {
  const double tolerance = 1e-12 * (1.0 + inf_norm(x));
  const double diameter = m.quad().diameter();
  NaturalPoint t = guess;

  for (int iteration = 0;; ++iteration) {
    const Vec2 r = map_point(m, t) - x;
    if (inf_norm(r) < tolerance) return {t, iteration, inf_norm(r)};
    if (iteration == kNewtonMaxIterations) {
      throw Error(ErrorKind::kNewtonDivergence,
                  "inverse_map: no convergence after " + std::to_string(kNewtonMaxIterations) + " iterations");
    }

    // Jacobian dx/dt has the covariant basis vectors as its columns.
    const auto g = covariant_basis(m, t);
    const double det = determinant(g);
    if (!(std::abs(det) >= 1e-12 * diameter * diameter)) {
      throw Error(ErrorKind::kSingularJacobian, "inverse_map: singular Jacobian at an iterate");
    }
    const double dt1 = (g[1].x2 * r.x1 - g[1].x1 * r.x2) / det;
    const double dt2 = (-g[0].x2 * r.x1 + g[0].x1 * r.x2) / det;
    t = {t.t1 - dt1, t.t2 - dt2};

    if (!(std::abs(t.t1) <= kNewtonBox && std::abs(t.t2) <= kNewtonBox)) {
      throw Error(ErrorKind::kNewtonDivergence, "inverse_map: iterate left [-10, 10]^2");
    }
  }
}

}  // namespace quadmap
