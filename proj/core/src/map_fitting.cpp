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

#include "quadmap/map_fitting.hpp"

#include <algorithm>
#include <sstream>

#include "quadmap/error.hpp"

namespace quadmap {

namespace {

bool has_node(const NodeTable& table, NodeId id) {
  return std::any_of(table.rows.begin(), table.rows.end(), [id](const NodeRow& r) { return r.id == id; });
}

Point2 require_finite(const Pole& pole, NodeId id) {
  if (const auto* p = std::get_if<Point2>(&pole)) return *p;
  throw Error(ErrorKind::kMissingPole,
              "assemble_system: pole " + std::to_string(node_number(id)) + " is at infinity");
}

}  // namespace

std::string_view to_string(Pairing pairing) {
  return pairing == Pairing::kTextOrder ? "text-order" : "swapped";
}

std::optional<Pairing> pairing_from_string(std::string_view name) {
  if (name == "text-order") return Pairing::kTextOrder;
  if (name == "swapped") return Pairing::kSwapped;
  return std::nullopt;
}

std::vector<int> dropped_monomials(const BasisSpec& spec, const NodeTable& table) {
  std::vector<int> dropped;
  if (spec.scheme() == Scheme::kLagrange4) return dropped;
  // A t1^3 column over corners, midpoints and the (0, t6) pole is the same
  // as t1 there, so pascal10 gives up its pure cubic instead of the square.
  const int order = spec.scheme() == Scheme::kPascal6 ? 2 : 3;
  if (!has_node(table, NodeId::kPole5)) dropped.push_back(spec.index_of({order, 0}));
  if (!has_node(table, NodeId::kPole6)) dropped.push_back(spec.index_of({0, order}));
  std::sort(dropped.begin(), dropped.end());
  return dropped;
}

AssembledSystem assemble_system(const Quad& q, const NodeTable& table, Pairing pairing) {
  const BasisSpec spec(table.scheme);
  const std::vector<int> dropped = dropped_monomials(spec, table);

  AssembledSystem sys;
  for (int k = 0; k < spec.size(); ++k) {
    if (!std::binary_search(dropped.begin(), dropped.end(), k)) sys.columns.push_back(k);
  }
  const int n = static_cast<int>(table.rows.size());
  if (n != static_cast<int>(sys.columns.size())) {
    throw Error(ErrorKind::kInvalidArgument,
                "assemble_system: " + std::to_string(n) + " nodes for " +
                    std::to_string(sys.columns.size()) + " monomials");
  }

  const bool both_poles = has_node(table, NodeId::kPole5) && has_node(table, NodeId::kPole6);
  sys.pairing = both_poles ? pairing : Pairing::kTextOrder;

  const bool needs_poles = has_node(table, NodeId::kPole5) || has_node(table, NodeId::kPole6);
  const PoleSet poles = needs_poles ? compute_poles(q) : PoleSet{AtInfinity{}, AtInfinity{}};
  const MidpointFrame frame = midpoint_frame(q);

  const auto cartesian = [&](NodeId id) -> Point2 {
    switch (id) {
      case NodeId::kCorner1:
      case NodeId::kCorner2:
      case NodeId::kCorner3:
      case NodeId::kCorner4:
        return q.node(node_number(id));
      case NodeId::kPole5:
        return sys.pairing == Pairing::kTextOrder ? require_finite(poles.pole5, id)
                                                  : require_finite(poles.pole6, NodeId::kPole6);
      case NodeId::kPole6:
        return sys.pairing == Pairing::kTextOrder ? require_finite(poles.pole6, id)
                                                  : require_finite(poles.pole5, NodeId::kPole5);
      case NodeId::kMid7: return frame.r7;
      case NodeId::kMid8: return frame.r8;
      case NodeId::kMid9: return frame.r9;
      case NodeId::kMid10: return frame.r10;
    }
    return {};
  };

  sys.a = Matrix(n, n);
  sys.x = Matrix(n, 2);
  for (int r = 0; r < n; ++r) {
    const NodeRow& node = table.rows[r];
    const std::vector<double> row = basis_row(spec, node.at);
    for (int c = 0; c < n; ++c) sys.a(r, c) = row[sys.columns[c]];
    const Point2 x = cartesian(node.id);
    sys.x(r, 0) = x.x1;
    sys.x(r, 1) = x.x2;
    sys.node_ids.push_back(node.id);
  }
  return sys;
}

FittedMap fit_map(const Quad& q, const BasisSpec& spec, const FitOptions& options) {
  FittedMap m(spec, q);
  m.poles_ = compute_poles(q);
  m.scaled_ = scaled_pole_coordinates(midpoint_frame(q), m.poles_);

  if (options.scaled_pole_override) {
    const auto [t5, t6] = *options.scaled_pole_override;
    if (m.scaled_.t5) m.scaled_.t5 = t5;
    else m.warnings_.push_back("override for t5 ignored: pole 5 is at infinity");
    if (m.scaled_.t6) m.scaled_.t6 = t6;
    else m.warnings_.push_back("override for t6 ignored: pole 6 is at infinity");
    m.scaled_.source = PoleSource::kOverride;
  }

  const NodeTable table = node_table(spec, m.scaled_, options.reduce_degenerate);
  const AssembledSystem sys = assemble_system(q, table, options.pairing);
  const int n = sys.a.rows();

  // One factorization gives both the parameters and the shape matrix.
  Matrix rhs(n, 2 + n);
  for (int r = 0; r < n; ++r) {
    rhs(r, 0) = sys.x(r, 0);
    rhs(r, 1) = sys.x(r, 1);
    rhs(r, 2 + r) = 1.0;
  }
  const DenseSolution solution = solve_dense(sys.a, rhs);

  m.pairing_ = sys.pairing;
  m.retained_ = sys.columns;
  m.dropped_ = dropped_monomials(spec, table);
  m.cond_estimate_ = solution.cond_estimate;
  m.params_ = Matrix(spec.size(), 2);
  m.shape_matrix_ = Matrix(n, n);
  for (int r = 0; r < n; ++r) {
    m.params_(sys.columns[r], 0) = solution.x(r, 0);
    m.params_(sys.columns[r], 1) = solution.x(r, 1);
    for (int c = 0; c < n; ++c) m.shape_matrix_(r, c) = solution.x(r, 2 + c);
  }
  m.nodes_ = table.rows;
  for (int r = 0; r < n; ++r) m.node_positions_.push_back({sys.x(r, 0), sys.x(r, 1)});

  if (m.cond_estimate_ > kConditionWarning) {
    std::ostringstream os;
    os << "interpolation matrix is ill-conditioned (cond_inf = " << m.cond_estimate_ << ")";
    m.warnings_.push_back(os.str());
  }
  if (m.pairing_ != options.pairing && spec.scheme() != Scheme::kLagrange4) {
    m.warnings_.push_back("swapped pairing needs both poles; text-order used");
  }
  return m;
}

std::vector<double> shape_function_weights(const FittedMap& m, NaturalPoint p) {
  const std::vector<double> row = basis_row(m.spec(), p);
  const Matrix& b = m.shape_matrix();
  std::vector<double> weights(b.cols(), 0.0);
  for (int r = 0; r < b.rows(); ++r) {
    const double v = row[m.retained()[r]];
    for (int k = 0; k < b.cols(); ++k) weights[k] += v * b(r, k);
  }
  return weights;
}

}  // namespace quadmap
