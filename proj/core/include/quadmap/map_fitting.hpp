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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quadmap/dense_solver.hpp"
#include "quadmap/natural_coordinates.hpp"
#include "quadmap/planar_geometry.hpp"
#include "quadmap/polynomial_basis.hpp"

namespace quadmap {

// Which Cartesian pole goes with which natural pole row.
//   kTextOrder: (t5, 0) <-> pole (5), (0, t6) <-> pole (6)
//   kSwapped:   (t5, 0) <-> pole (6), (0, t6) <-> pole (5)
// Swapping needs both pole rows; with one pole at infinity the text order is
// used whatever was requested.
enum class Pairing { kTextOrder, kSwapped };

std::string_view to_string(Pairing pairing);
std::optional<Pairing> pairing_from_string(std::string_view name);

// Square interpolation system A a = X over the retained monomial columns.
struct AssembledSystem {
  Matrix a;                    // n x n, row k = basis row at node k
  Matrix x;                    // n x 2, Cartesian coordinates of node k
  std::vector<NodeId> node_ids;
  std::vector<int> columns;    // retained monomial indices, ascending
  Pairing pairing;             // pairing actually applied
};

// Monomials forced to zero when pole rows are missing from the table:
// pascal6 drops t1^2 / t2^2, pascal10 drops t1^3 / t2^3.
std::vector<int> dropped_monomials(const BasisSpec& spec, const NodeTable& table);

AssembledSystem assemble_system(const Quad& q, const NodeTable& table, Pairing pairing);

struct FitOptions {
  Pairing pairing = Pairing::kTextOrder;
  // Replaces the computed (t5, t6) for poles that are finite.
  std::optional<std::pair<double, double>> scaled_pole_override;
  // Drop rows/columns for poles at infinity. Without it such quads raise
  // MissingPole for the pascal schemes.
  bool reduce_degenerate = true;
};

class FittedMap {
 public:
  const BasisSpec& spec() const { return spec_; }
  // spec().size() x 2; row k holds the coefficients of monomial k.
  const Matrix& params() const { return params_; }
  Vec2 param(int k) const { return {params_(k, 0), params_(k, 1)}; }
  const Quad& quad() const { return quad_; }
  const PoleSet& poles() const { return poles_; }
  const ScaledPoles& scaled() const { return scaled_; }
  Pairing pairing() const { return pairing_; }
  const std::vector<int>& dropped() const { return dropped_; }
  const std::vector<int>& retained() const { return retained_; }
  double cond_estimate() const { return cond_estimate_; }
  const std::vector<NodeRow>& nodes() const { return nodes_; }
  const std::vector<Point2>& node_positions() const { return node_positions_; }
  // Inverse of the assembled matrix: retained().size() x nodes().size().
  const Matrix& shape_matrix() const { return shape_matrix_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  friend FittedMap fit_map(const Quad& q, const BasisSpec& spec, const FitOptions& options);
  FittedMap(const BasisSpec& spec, const Quad& q) : spec_(spec), quad_(q) {}

  BasisSpec spec_;
  Matrix params_;
  Quad quad_;
  PoleSet poles_{};
  ScaledPoles scaled_;
  Pairing pairing_ = Pairing::kTextOrder;
  std::vector<int> dropped_;
  std::vector<int> retained_;
  double cond_estimate_ = 0.0;
  std::vector<NodeRow> nodes_;
  std::vector<Point2> node_positions_;
  Matrix shape_matrix_;
  std::vector<std::string> warnings_;
};

// Poles, scaled poles, node table, assembly and solve in one step.
// Throws DegenerateQuadError, MissingPole (reduce_degenerate = false) or
// SingularSystemError.
FittedMap fit_map(const Quad& q, const BasisSpec& spec, const FitOptions& options = {});

// Nodal weights N(p) B; sum_k w_k x_k is the mapped point.
std::vector<double> shape_function_weights(const FittedMap& m, NaturalPoint p);

}  // namespace quadmap
