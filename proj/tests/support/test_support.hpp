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

// Fixtures, random generators and independent oracles shared by the unit and
// acceptance suites. Nothing here calls into the library's computational
// paths except to build the Quad value type.

#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <random>
#include <utility>

#include "quadmap/quadmap.hpp"

namespace quadmap::testing {

// Worked-example element used throughout the suites.
inline constexpr std::array<Point2, 4> kExampleVertices = {{{1.0, 1.0}, {4.0, 2.0}, {3.0, 4.0}, {2.0, 5.0}}};

// Reference scaled pole values for the worked example; reproducible only as
// an override (see the natural-coordinates tests).
inline constexpr double kExampleT5 = 3.80788655;
inline constexpr double kExampleT6 = 1.76698110;

// Reference generalized parameters of the second-order fit of the example
// (8 decimals), obtained with the pole rows exchanged.
inline constexpr std::array<std::array<double, 2>, 6> kExamplePascalParams = {{
    {1.78769652, 4.48213067},
    {1.00000000, 0.00000000},
    {0.00000000, 1.50000000},
    {-0.23647699, 0.08169214},
    {-0.50000000, -0.50000000},
    {0.94878047, -1.56382281},
}};

inline constexpr std::array<std::array<double, 2>, 4> kExampleLagrangeParams = {{
    {2.50, 3.00},
    {1.00, 0.00},
    {0.00, 1.50},
    {-0.5, -0.5},
}};

inline Quad example_quad() { return validate_quad(kExampleVertices); }
inline Quad unit_square() { return validate_quad(std::array<Point2, 4>{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}); }

inline FitOptions example_override(Pairing pairing) {
  FitOptions o;
  o.pairing = pairing;
  o.scaled_pole_override = std::make_pair(kExampleT5, kExampleT6);
  return o;
}

// ---------------------------------------------------------------------------
// Oracles

// Segment-parametric intersection p1 + s (p2 - p1) = p3 + u (p4 - p3) by
// Cramer's rule; nullopt when the directions are parallel.
inline std::optional<Point2> oracle_intersection(Point2 p1, Point2 p2, Point2 p3, Point2 p4) {
  const double d1x = p2.x1 - p1.x1, d1y = p2.x2 - p1.x2;
  const double d2x = p4.x1 - p3.x1, d2y = p4.x2 - p3.x2;
  const double det = -d1x * d2y + d2x * d1y;
  const double sin_angle = std::abs(det) / (std::hypot(d1x, d1y) * std::hypot(d2x, d2y));
  if (sin_angle <= 1e-9) return std::nullopt;
  const double rx = p3.x1 - p1.x1, ry = p3.x2 - p1.x2;
  const double s = (-rx * d2y + d2x * ry) / det;
  return Point2{p1.x1 + s * d1x, p1.x2 + s * d1y};
}

// Sum of the two fan triangles from vertex 1, each by Heron's formula.
inline double oracle_area(const std::array<Point2, 4>& v) {
  const auto len = [](Point2 a, Point2 b) { return std::hypot(a.x1 - b.x1, a.x2 - b.x2); };
  const auto heron = [&](Point2 a, Point2 b, Point2 c) {
    const double x = len(a, b), y = len(b, c), z = len(c, a);
    const double s = (x + y + z) / 2.0;
    return std::sqrt(std::max(0.0, s * (s - x) * (s - y) * (s - z)));
  };
  return heron(v[0], v[1], v[2]) + heron(v[0], v[2], v[3]);
}

// The signed centroid-distance ratio for one pole, written out directly.
inline std::optional<double> oracle_scaled(std::optional<Point2> pole, Point2 rg, Point2 positive_mid,
                                           Point2 negative_mid) {
  if (!pole) return std::nullopt;
  const double dx = pole->x1 - rg.x1, dy = pole->x2 - rg.x2;
  const double px = positive_mid.x1 - rg.x1, py = positive_mid.x2 - rg.x2;
  const double nx = negative_mid.x1 - rg.x1, ny = negative_mid.x2 - rg.x2;
  const double dist = std::hypot(dx, dy);
  if (dx * px + dy * py >= 0.0) return dist / std::hypot(px, py);
  return -dist / std::hypot(nx, ny);
}

inline std::pair<std::optional<double>, std::optional<double>> oracle_scaled_poles(const std::array<Point2, 4>& v) {
  const auto mid = [](Point2 a, Point2 b) { return Point2{(a.x1 + b.x1) / 2, (a.x2 + b.x2) / 2}; };
  const Point2 rg{(v[0].x1 + v[1].x1 + v[2].x1 + v[3].x1) / 4, (v[0].x2 + v[1].x2 + v[2].x2 + v[3].x2) / 4};
  const Point2 r7 = mid(v[0], v[1]), r8 = mid(v[1], v[2]), r9 = mid(v[2], v[3]), r10 = mid(v[3], v[0]);
  return {oracle_scaled(oracle_intersection(v[0], v[1], v[2], v[3]), rg, r8, r10),
          oracle_scaled(oracle_intersection(v[1], v[2], v[3], v[0]), rg, r9, r7)};
}

// ---------------------------------------------------------------------------
// Random elements. All generators are deterministic given the engine.

using Rng = std::mt19937_64;

inline bool strictly_convex_ccw(const std::array<Point2, 4>& v, double min_turn) {
  for (int i = 0; i < 4; ++i) {
    const Point2 a = v[i], b = v[(i + 1) % 4], c = v[(i + 2) % 4];
    const double t = (b.x1 - a.x1) * (c.x2 - b.x2) - (b.x2 - a.x2) * (c.x1 - b.x1);
    if (t <= min_turn) return false;
  }
  return true;
}

// |cross| of the unit directions of two segments.
inline double direction_sine(Point2 a, Point2 b, Point2 c, Point2 d) {
  const double ux = b.x1 - a.x1, uy = b.x2 - a.x2, wx = d.x1 - c.x1, wy = d.x2 - c.x2;
  return std::abs(ux * wy - uy * wx) / (std::hypot(ux, uy) * std::hypot(wx, wy));
}

// Convex counterclockwise quad: a jittered square under a random similarity
// and translation. With `min_edge_sine` > 0 both opposite edge pairs are
// kept at least that far from parallel, so both poles are finite and at a
// bounded distance.
inline std::array<Point2, 4> random_convex_quad(Rng& rng, double min_edge_sine = 0.0) {
  std::uniform_real_distribution<double> jitter(-0.4, 0.4);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::uniform_real_distribution<double> scale(0.2, 5.0);
  std::uniform_real_distribution<double> shift(-10.0, 10.0);
  for (;;) {
    const double th = angle(rng), s = scale(rng), tx = shift(rng), ty = shift(rng);
    std::array<Point2, 4> v = {{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}};
    for (Point2& p : v) {
      const double x = p.x1 + jitter(rng), y = p.x2 + jitter(rng);
      p = {tx + s * (std::cos(th) * x - std::sin(th) * y), ty + s * (std::sin(th) * x + std::cos(th) * y)};
    }
    if (!strictly_convex_ccw(v, 1e-3 * s * s)) continue;
    if (min_edge_sine > 0.0 && (direction_sine(v[0], v[1], v[2], v[3]) < min_edge_sine ||
                                direction_sine(v[1], v[2], v[3], v[0]) < min_edge_sine)) {
      continue;
    }
    return v;
  }
}

// Parallelogram v1, v1 + e, v1 + e + f, v1 + f with cross(e, f) > 0.
inline std::array<Point2, 4> random_parallelogram(Rng& rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (;;) {
    const Point2 o{u(rng), u(rng)};
    const Vec2 e{u(rng), u(rng)};
    const Vec2 f{u(rng), u(rng)};
    const double c = cross(e, f);
    if (c < 0.2 || norm(e) < 0.2 || norm(f) < 0.2) continue;
    return {{o, o + e, o + e + f, o + f}};
  }
}

// Trapezoid with exactly one parallel pair. `parallel_first` puts the pair
// on edges (1)(2) / (3)(4); otherwise on (2)(3) / (4)(1).
inline std::array<Point2, 4> random_trapezoid(Rng& rng, bool parallel_first) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> ratio(0.2, 0.8);
  std::uniform_real_distribution<double> offset(-1.0, 1.0);
  for (;;) {
    const Point2 o{u(rng), u(rng)};
    const Vec2 e{u(rng), u(rng)};
    const Vec2 f{u(rng), u(rng)};
    if (cross(e, f) < 0.5 || norm(e) < 0.3) continue;
    // Bottom o -> o + e, top shortened and shifted along e.
    const double r = ratio(rng), s = offset(rng) * (1.0 - r) / 2.0;
    const Point2 top_start = o + f + (0.5 * (1.0 - r) + s) * e;
    const Point2 top_end = top_start + r * e;
    std::array<Point2, 4> v = {{o, o + e, top_end, top_start}};
    if (!strictly_convex_ccw(v, 1e-2)) continue;
    if (!parallel_first) v = {{v[1], v[2], v[3], v[0]}};
    return v;
  }
}

inline NaturalPoint random_natural(Rng& rng, double half_width = 1.0) {
  std::uniform_real_distribution<double> u(-half_width, half_width);
  return {u(rng), u(rng)};
}

}  // namespace quadmap::testing
