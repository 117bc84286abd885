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

#include "quadmap/natural_coordinates.hpp"

#include <algorithm>

#include "quadmap/error.hpp"

namespace quadmap {

namespace {

std::optional<double> scale_pole(const Pole& pole, Point2 rg, Point2 positive_mid,
                                 Point2 negative_mid, double min_distance) {
  const auto* point = std::get_if<Point2>(&pole);
  if (point == nullptr) return std::nullopt;

  const Vec2 d = *point - rg;
  const Vec2 toward_positive = positive_mid - rg;
  const double pos_len = norm(toward_positive);
  const double neg_len = norm(negative_mid - rg);
  if (pos_len < min_distance || neg_len < min_distance) {
    throw DegenerateQuadError(DegeneracyReason::kZeroMidpointDistance,
                              "scaled_pole_coordinates: edge midpoint coincides with centroid");
  }
  if (dot(d, toward_positive) >= 0.0) return norm(d) / pos_len;
  return -norm(d) / neg_len;
}

}  // namespace

std::string_view to_string(PoleSource source) {
  return source == PoleSource::kComputed ? "computed" : "override";
}

ScaledPoles scaled_pole_coordinates(const MidpointFrame& frame, const PoleSet& poles) {
  // Longest bimedian stands in for the diameter; both diagonals are at most
  // twice its length.
  const double scale = std::max({norm(frame.r7 - frame.r9), norm(frame.r8 - frame.r10), 1e-300});
  const double min_distance = 1e-12 * scale;
  ScaledPoles out;
  out.t5 = scale_pole(poles.pole5, frame.rg, frame.r8, frame.r10, min_distance);
  out.t6 = scale_pole(poles.pole6, frame.rg, frame.r9, frame.r7, min_distance);
  out.source = PoleSource::kComputed;
  return out;
}

NodeTable node_table(const BasisSpec& spec, const ScaledPoles& sp, bool omit_infinite_poles) {
  NodeTable table{spec.scheme(), {}};
  table.rows = {
      {NodeId::kCorner1, {-1.0, -1.0}},
      {NodeId::kCorner2, {+1.0, -1.0}},
      {NodeId::kCorner3, {+1.0, +1.0}},
      {NodeId::kCorner4, {-1.0, +1.0}},
  };
  if (spec.scheme() == Scheme::kLagrange4) return table;

  const auto add_pole = [&](NodeId id, const std::optional<double>& t, NaturalPoint at) {
    if (t.has_value()) {
      table.rows.push_back({id, at});
      return;
    }
    if (!omit_infinite_poles) {
      throw Error(ErrorKind::kMissingPole,
                  "node_table: pole " + std::to_string(node_number(id)) +
                      " is at infinity and no reduction was requested");
    }
  };
  add_pole(NodeId::kPole5, sp.t5, {sp.t5.value_or(0.0), 0.0});
  add_pole(NodeId::kPole6, sp.t6, {0.0, sp.t6.value_or(0.0)});

  if (spec.scheme() == Scheme::kPascal10) {
    table.rows.push_back({NodeId::kMid7, {0.0, -1.0}});
    table.rows.push_back({NodeId::kMid8, {+1.0, 0.0}});
    table.rows.push_back({NodeId::kMid9, {0.0, +1.0}});
    table.rows.push_back({NodeId::kMid10, {-1.0, 0.0}});
  }
  return table;
}

}  // namespace quadmap
