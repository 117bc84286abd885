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
#include <string_view>
#include <vector>

#include "quadmap/planar_geometry.hpp"
#include "quadmap/polynomial_basis.hpp"

namespace quadmap {

enum class PoleSource { kComputed, kOverride };

std::string_view to_string(PoleSource source);

// Natural coordinates assigned to the poles: t5 is the t1 value of pole (5)
// on the t2 = 0 axis, t6 the t2 value of pole (6) on the t1 = 0 axis.
// std::nullopt marks a pole at infinity.
struct ScaledPoles {
  std::optional<double> t5;
  std::optional<double> t6;
  PoleSource source = PoleSource::kComputed;
};

// Signed distance ratio from the centroid. With d = pole - rg, the pole takes
// the positive branch when d points toward the positive-axis edge midpoint
// (r8 for pole 5, r9 for pole 6) and is then scaled by that midpoint's
// distance; otherwise it is negative and scaled by the opposite midpoint
// (r10, r7).
// Throws DegenerateQuadError(kZeroMidpointDistance) if a denominator vanishes.
ScaledPoles scaled_pole_coordinates(const MidpointFrame& frame, const PoleSet& poles);

// Node numbering: 1..4 corners, 5 and 6 poles, 7..10 edge midpoints.
enum class NodeId : int {
  kCorner1 = 1,
  kCorner2,
  kCorner3,
  kCorner4,
  kPole5,
  kPole6,
  kMid7,
  kMid8,
  kMid9,
  kMid10,
};

inline int node_number(NodeId id) { return static_cast<int>(id); }

struct NodeRow {
  NodeId id;
  NaturalPoint at;
};

struct NodeTable {
  Scheme scheme;
  std::vector<NodeRow> rows;
};

// Natural coordinates of the interpolation nodes of a scheme. A pole slot
// that is at infinity throws MissingPole unless `omit_infinite_poles`, in
// which case the row is left out.
NodeTable node_table(const BasisSpec& spec, const ScaledPoles& sp, bool omit_infinite_poles = false);

}  // namespace quadmap
