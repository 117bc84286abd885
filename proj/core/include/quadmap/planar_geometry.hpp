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
#include <cmath>
#include <span>
#include <variant>

namespace quadmap {

// Cartesian vector / point in the plane. x1 is the abscissa, x2 the ordinate.
struct Vec2 {
  double x1 = 0.0;
  double x2 = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x1, s * a.x2}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return s * a; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

using Point2 = Vec2;

constexpr double dot(Vec2 a, Vec2 b) { return a.x1 * b.x1 + a.x2 * b.x2; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x1 * b.x2 - a.x2 * b.x1; }
inline double norm(Vec2 a) { return std::hypot(a.x1, a.x2); }

// Implicit line a*x1 + b*x2 + c = 0 with a^2 + b^2 = 1.
struct Line2 {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double residual(Point2 p) const { return a * p.x1 + b * p.x2 + c; }
  // Unit direction along the line: (b, -a).
  Vec2 direction() const { return {b, -a}; }
};

// A straight-edged quadrilateral with vertices (1)..(4) stored at indices
// 0..3. Only obtainable through validate_quad, so every instance is simple,
// non-degenerate and counterclockwise.
class Quad {
 public:
  const std::array<Point2, 4>& vertices() const { return vertices_; }
  // 1-based node number, matching the corner numbering of the natural square.
  Point2 node(int number) const { return vertices_.at(number - 1); }
  // Largest pairwise vertex distance; used to scale tolerances.
  double diameter() const { return diameter_; }

 private:
  friend Quad validate_quad(std::span<const Point2, 4> vertices);
  explicit Quad(const std::array<Point2, 4>& v);

  std::array<Point2, 4> vertices_;
  double diameter_;
};

struct AtInfinity {
  Vec2 direction;  // unit length
};

// Intersection of two lines, or the common direction when they are parallel.
using Pole = std::variant<Point2, AtInfinity>;

inline bool is_finite(const Pole& p) { return std::holds_alternative<Point2>(p); }

struct PoleSet {
  Pole pole5;  // lines through edges (1)(2) and (3)(4)
  Pole pole6;  // lines through edges (2)(3) and (4)(1)
};

struct MidpointFrame {
  Point2 r7;   // edge (1)(2)
  Point2 r8;   // edge (2)(3)
  Point2 r9;   // edge (3)(4)
  Point2 r10;  // edge (4)(1)
  Point2 rg;   // vertex centroid
};

// |cross| of unit directions at or below this is treated as parallel.
inline constexpr double kParallelTolerance = 1e-9;

// Throws Error(kDegenerateInput) when p == q.
Line2 line_through_points(Point2 p, Point2 q);

// Throws Error(kCoincidentLines) for parallel lines that are the same line.
Pole intersect_lines(const Line2& l1, const Line2& l2);

// Throws DegenerateQuadError(kCoincidentEdgeLines) when an opposite edge
// pair lies on one line.
PoleSet compute_poles(const Quad& q);

MidpointFrame midpoint_frame(const Quad& q);

double signed_area(std::span<const Point2, 4> vertices);
double shoelace_area(const Quad& q);

// Accepts simple (possibly non-convex) counterclockwise quads; never reorders.
// Throws DegenerateQuadError naming the first violated condition.
Quad validate_quad(std::span<const Point2, 4> vertices);

inline Quad validate_quad(const std::array<Point2, 4>& vertices) {
  return validate_quad(std::span<const Point2, 4>(vertices));
}

}  // namespace quadmap
