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

#include "quadmap/planar_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "quadmap/error.hpp"

namespace quadmap {

namespace {

constexpr double kValidationTolerance = 1e-9;

std::string describe(Point2 p) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << p.x1 << ", " << p.x2 << ")";
  return os.str();
}

// Orientation of c relative to the directed segment a->b, with a relative
// dead band so nearly collinear triples count as collinear.
int orientation(Point2 a, Point2 b, Point2 c, double eps) {
  const double v = cross(b - a, c - a);
  if (v > eps) return 1;
  if (v < -eps) return -1;
  return 0;
}

// Proper crossing of two segments that share no endpoint.
bool segments_cross(Point2 p1, Point2 p2, Point2 q1, Point2 q2, double eps) {
  const int o1 = orientation(p1, p2, q1, eps);
  const int o2 = orientation(p1, p2, q2, eps);
  const int o3 = orientation(q1, q2, p1, eps);
  const int o4 = orientation(q1, q2, p2, eps);
  return o1 * o2 <= 0 && o3 * o4 <= 0;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDegenerateInput: return "DegenerateInput";
    case ErrorKind::kCoincidentLines: return "CoincidentLines";
    case ErrorKind::kDegenerateQuad: return "DegenerateQuad";
    case ErrorKind::kMissingPole: return "MissingPole";
    case ErrorKind::kSingularSystem: return "SingularSystem";
    case ErrorKind::kSingularJacobian: return "SingularJacobian";
    case ErrorKind::kNewtonDivergence: return "NewtonDivergence";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kParseError: return "ParseError";
  }
  return "Unknown";
}

std::string_view to_string(DegeneracyReason reason) {
  switch (reason) {
    case DegeneracyReason::kCoincidentVertices: return "coincident-vertices";
    case DegeneracyReason::kCollinearTriple: return "collinear-triple";
    case DegeneracyReason::kSelfIntersecting: return "self-intersecting";
    case DegeneracyReason::kClockwise: return "clockwise";
    case DegeneracyReason::kCoincidentEdgeLines: return "coincident-edge-lines";
    case DegeneracyReason::kZeroMidpointDistance: return "zero-midpoint-distance";
  }
  return "unknown";
}

Quad::Quad(const std::array<Point2, 4>& v) : vertices_(v), diameter_(0.0) {
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) diameter_ = std::max(diameter_, norm(v[i] - v[j]));
  }
}

Line2 line_through_points(Point2 p, Point2 q) {
  // Expansion of |x1 x2 1; p1 p2 1; q1 q2 1| = 0 along its first row.
  const double a = p.x2 - q.x2;
  const double b = q.x1 - p.x1;
  const double c = p.x1 * q.x2 - q.x1 * p.x2;
  const double len = std::hypot(a, b);
  if (len == 0.0) {
    throw Error(ErrorKind::kDegenerateInput,
                "line_through_points: points coincide at " + describe(p));
  }
  return {a / len, b / len, c / len};
}

Pole intersect_lines(const Line2& l1, const Line2& l2) {
  // Normals are unit length, so det is the sine of the angle between lines.
  const double det = l1.a * l2.b - l2.a * l1.b;
  if (std::abs(det) <= kParallelTolerance) {
    // Align normals before comparing offsets.
    const double sign = (l1.a * l2.a + l1.b * l2.b) >= 0.0 ? 1.0 : -1.0;
    const double gap = std::abs(l1.c - sign * l2.c);
    const double scale = std::max({1.0, std::abs(l1.c), std::abs(l2.c)});
    if (gap < kParallelTolerance * scale) {
      throw Error(ErrorKind::kCoincidentLines, "intersect_lines: lines coincide");
    }
    return AtInfinity{l1.direction()};
  }
  return Point2{(l1.b * l2.c - l2.b * l1.c) / det, (l1.c * l2.a - l2.c * l1.a) / det};
}

PoleSet compute_poles(const Quad& q) {
  const auto pole_of = [&](int a, int b, int c, int d) -> Pole {
    try {
      return intersect_lines(line_through_points(q.node(a), q.node(b)),
                             line_through_points(q.node(c), q.node(d)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kCoincidentLines) throw;
      throw DegenerateQuadError(DegeneracyReason::kCoincidentEdgeLines,
                                "compute_poles: opposite edges lie on one line");
    }
  };
  return {pole_of(1, 2, 3, 4), pole_of(2, 3, 4, 1)};
}

MidpointFrame midpoint_frame(const Quad& q) {
  const auto& v = q.vertices();
  const auto mid = [](Point2 a, Point2 b) { return Point2{(a.x1 + b.x1) / 2.0, (a.x2 + b.x2) / 2.0}; };
  return {mid(v[0], v[1]),
          mid(v[1], v[2]),
          mid(v[2], v[3]),
          mid(v[3], v[0]),
          {(v[0].x1 + v[1].x1 + v[2].x1 + v[3].x1) / 4.0,
           (v[0].x2 + v[1].x2 + v[2].x2 + v[3].x2) / 4.0}};
}

double signed_area(std::span<const Point2, 4> v) {
  double twice = 0.0;
  for (int i = 0; i < 4; ++i) twice += cross(v[i], v[(i + 1) % 4]);
  return twice / 2.0;
}

double shoelace_area(const Quad& q) { return signed_area(q.vertices()); }

Quad validate_quad(std::span<const Point2, 4> vertices) {
  std::array<Point2, 4> v;
  std::copy(vertices.begin(), vertices.end(), v.begin());
  for (const Point2& p : v) {
    if (!std::isfinite(p.x1) || !std::isfinite(p.x2)) {
      throw Error(ErrorKind::kDegenerateInput,
                  "validate_quad: non-finite coordinate " + describe(p));
    }
  }

  double diameter = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) diameter = std::max(diameter, norm(v[i] - v[j]));
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (norm(v[i] - v[j]) <= kValidationTolerance * diameter || diameter == 0.0) {
        throw DegenerateQuadError(
            DegeneracyReason::kCoincidentVertices,
            "validate_quad: vertices " + std::to_string(i + 1) + " and " +
                std::to_string(j + 1) + " coincide");
      }
    }
  }

  // Any three of four cyclic vertices are consecutive.
  const double area_eps = kValidationTolerance * diameter * diameter;
  for (int i = 0; i < 4; ++i) {
    if (orientation(v[i], v[(i + 1) % 4], v[(i + 2) % 4], area_eps) == 0) {
      throw DegenerateQuadError(
          DegeneracyReason::kCollinearTriple,
          "validate_quad: vertices " + std::to_string(i + 1) + ", " +
              std::to_string((i + 1) % 4 + 1) + ", " + std::to_string((i + 2) % 4 + 1) +
              " are collinear");
    }
  }

  if (segments_cross(v[0], v[1], v[2], v[3], area_eps) ||
      segments_cross(v[1], v[2], v[3], v[0], area_eps)) {
    throw DegenerateQuadError(DegeneracyReason::kSelfIntersecting,
                              "validate_quad: opposite edges cross");
  }

  if (signed_area(v) <= 0.0) {
    throw DegenerateQuadError(DegeneracyReason::kClockwise,
                              "validate_quad: vertices are ordered clockwise");
  }
  return Quad(v);
}

}  // namespace quadmap
