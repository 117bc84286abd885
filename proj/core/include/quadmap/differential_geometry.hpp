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

#include "quadmap/map_fitting.hpp"

namespace quadmap {

// 2x2 matrix; m[r][c].
using Mat2 = std::array<std::array<double, 2>, 2>;
// Third-order array indexed [alpha][beta][gamma]; symmetric in alpha, beta.
using Christoffel = std::array<Mat2, 2>;

// Differential geometry of the fitted map at one natural point. Greek
// indices are 0-based here (0 <-> t1, 1 <-> t2).
struct GeometryState {
  NaturalPoint at;
  Point2 position;
  // Row alpha: covariant basis vector g_alpha = dr/dt^alpha.
  std::array<Vec2, 2> g_cov;
  // Rows g_{1,1}, g_{2,1}, g_{1,2}, g_{2,2}: g_der[alpha + 2 * beta] is
  // d g_alpha / d t^beta.
  std::array<Vec2, 4> g_der;
  Mat2 metric;      // g_{alpha beta}
  Mat2 metric_inv;  // g^{alpha beta}
  // Row alpha: contravariant basis vector g^alpha.
  std::array<Vec2, 2> g_contra;
  Christoffel gamma1;  // Gamma_{alpha beta gamma} = g_{alpha,beta} . g_gamma
  Christoffel gamma2;  // [alpha][beta][gamma] = Gamma^gamma_{alpha beta} = g_{alpha,beta} . g^gamma
  double jac_det;      // det of the matrix with rows g_1, g_2

  Vec2 derivative(int alpha, int beta) const { return g_der[alpha + 2 * beta]; }
};

Point2 map_point(const FittedMap& m, NaturalPoint p);

// Rows g_1, g_2.
std::array<Vec2, 2> covariant_basis(const FittedMap& m, NaturalPoint p);

// Rows ordered (1,1), (2,1), (1,2), (2,2).
std::array<Vec2, 4> basis_derivatives(const FittedMap& m, NaturalPoint p);

// Throws Error(kSingularJacobian) when |det| < 1e-12 * diameter^2.
GeometryState geometry_state(const FittedMap& m, NaturalPoint p);

// Largest Cartesian component of g_{a,b} - Gamma_{abc} g^c and of
// g_{a,b} - Gamma^c_{ab} g_c over all a, b.
double verify_gauss_relations(const GeometryState& s);

// Tensor Gauss-Legendre rule on [-1,1]^2 with 2, 3 or 4 points per axis.
double integrate_jacobian(const FittedMap& m, int points_per_axis);

struct InverseResult {
  NaturalPoint point;
  int iterations = 0;
  double residual = 0.0;  // ||map_point(point) - x||inf
};

inline constexpr int kNewtonMaxIterations = 50;
inline constexpr double kNewtonBox = 10.0;

// Plain Newton iteration from `guess`. Converged when
// ||residual||inf < 1e-12 * (1 + ||x||inf). Throws Error(kNewtonDivergence)
// after kNewtonMaxIterations or when an iterate leaves [-10, 10]^2, and
// Error(kSingularJacobian) at a singular iterate.
InverseResult inverse_map(const FittedMap& m, Point2 x, NaturalPoint guess = {0.0, 0.0});

}  // namespace quadmap
