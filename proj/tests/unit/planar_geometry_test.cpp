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

#include <gtest/gtest.h>

#include <cmath>

#include "quadmap/error.hpp"
#include "quadmap/planar_geometry.hpp"
#include "test_support.hpp"

namespace quadmap {
namespace {

using testing::example_quad;
using testing::kExampleVertices;
using testing::unit_square;

Point2 finite(const Pole& p) {
  EXPECT_TRUE(is_finite(p));
  return std::get<Point2>(p);
}

DegeneracyReason reason_of(const std::array<Point2, 4>& v) {
  try {
    validate_quad(v);
  } catch (const DegenerateQuadError& e) {
    return e.reason();
  }
  ADD_FAILURE() << "expected DegenerateQuadError";
  return DegeneracyReason::kCoincidentEdgeLines;
}

TEST(LineThroughPoints, ContainsBothPointsAndIsNormalized) {
  const Point2 p{1, 1}, q{4, 2};
  const Line2 l = line_through_points(p, q);
  EXPECT_NEAR(l.residual(p), 0.0, 1e-12 * 4.5);
  EXPECT_NEAR(l.residual(q), 0.0, 1e-12 * 4.5);
  EXPECT_NEAR(l.a * l.a + l.b * l.b, 1.0, 1e-15);
  // Direction parallel to (3, 1).
  EXPECT_NEAR(cross(l.direction(), {3, 1}), 0.0, 1e-15);
}

TEST(LineThroughPoints, AxisCase) {
  const Line2 l = line_through_points({0, 0}, {1, 0});
  EXPECT_EQ(l.a, 0.0);
  EXPECT_EQ(std::abs(l.b), 1.0);
  EXPECT_EQ(l.c, 0.0);
}

TEST(LineThroughPoints, ContainsMidpoint) {
  const Line2 l = line_through_points({2, 5}, {1, 1});
  EXPECT_NEAR(l.residual({1.5, 3.0}), 0.0, 1e-12 * 5.4);
}

TEST(LineThroughPoints, CoincidentPointsThrow) {
  try {
    line_through_points({2, 3}, {2, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDegenerateInput);
  }
}

TEST(IntersectLines, ExamplePoles) {
  const auto& v = kExampleVertices;
  const Point2 p5 = finite(intersect_lines(line_through_points(v[0], v[1]), line_through_points(v[2], v[3])));
  EXPECT_NEAR(p5.x1, 4.75, 1e-12);
  EXPECT_NEAR(p5.x2, 2.25, 1e-12);
  const Point2 p6 = finite(intersect_lines(line_through_points(v[1], v[2]), line_through_points(v[3], v[0])));
  EXPECT_NEAR(p6.x1, 13.0 / 6.0, 1e-12);
  EXPECT_NEAR(p6.x2, 17.0 / 3.0, 1e-12);
}

TEST(IntersectLines, ParallelHorizontalsAreAtInfinity) {
  const Pole p = intersect_lines(line_through_points({0, 0}, {1, 0}), line_through_points({0, 1}, {1, 1}));
  ASSERT_FALSE(is_finite(p));
  const Vec2 d = std::get<AtInfinity>(p).direction;
  EXPECT_NEAR(std::abs(d.x1), 1.0, 1e-15);
  EXPECT_NEAR(d.x2, 0.0, 1e-15);
}

TEST(IntersectLines, SameLineThrows) {
  try {
    intersect_lines(line_through_points({0, 0}, {1, 1}), line_through_points({3, 3}, {2, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCoincidentLines);
  }
}

TEST(ComputePoles, Example) {
  const PoleSet poles = compute_poles(example_quad());
  const Point2 p5 = finite(poles.pole5);
  const Point2 p6 = finite(poles.pole6);
  EXPECT_NEAR(p5.x1, 4.75, 1e-12);
  EXPECT_NEAR(p5.x2, 2.25, 1e-12);
  EXPECT_NEAR(p6.x1, 2.166667, 1e-6);
  EXPECT_NEAR(p6.x2, 5.666667, 1e-6);
}

TEST(ComputePoles, UnitSquareBothAtInfinity) {
  const PoleSet poles = compute_poles(unit_square());
  EXPECT_FALSE(is_finite(poles.pole5));
  EXPECT_FALSE(is_finite(poles.pole6));
}

TEST(ComputePoles, TrapezoidHasOneFinitePole) {
  const Quad q = validate_quad(std::array<Point2, 4>{{{0, 0}, {2, 0}, {1.5, 1}, {0.5, 1}}});
  const PoleSet poles = compute_poles(q);
  EXPECT_FALSE(is_finite(poles.pole5));
  const auto oracle = testing::oracle_intersection({2, 0}, {1.5, 1}, {0.5, 1}, {0, 0});
  ASSERT_TRUE(oracle.has_value());
  const Point2 p6 = finite(poles.pole6);
  EXPECT_NEAR(p6.x1, oracle->x1, 1e-12);
  EXPECT_NEAR(p6.x2, oracle->x2, 1e-12);
  EXPECT_NEAR(p6.x1, 1.0, 1e-12);
  EXPECT_NEAR(p6.x2, 2.0, 1e-12);
}

TEST(ComputePoles, PropertyPolesLieOnGeneratingLinesAndMatchOracle) {
  testing::Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const auto v = testing::random_convex_quad(rng);
    const Quad q = validate_quad(v);
    const PoleSet poles = compute_poles(q);
    const auto check = [&](const Pole& pole, int a, int b, int c, int d) {
      const auto oracle = testing::oracle_intersection(v[a], v[b], v[c], v[d]);
      ASSERT_EQ(is_finite(pole), oracle.has_value());
      if (!oracle) return;
      const Point2 p = std::get<Point2>(pole);
      // Residuals scale with the distance to the pole.
      const double scale = q.diameter() * std::max(1.0, norm(p - v[a]) / q.diameter());
      EXPECT_LT(std::abs(line_through_points(v[a], v[b]).residual(p)), 1e-9 * scale);
      EXPECT_LT(std::abs(line_through_points(v[c], v[d]).residual(p)), 1e-9 * scale);
      EXPECT_LT(norm(p - *oracle), 1e-7 * scale);
    };
    check(poles.pole5, 0, 1, 2, 3);
    check(poles.pole6, 1, 2, 3, 0);
  }
}

TEST(ComputePoles, PropertyTranslationInvariant) {
  testing::Rng rng(7);
  std::uniform_real_distribution<double> shift(-50.0, 50.0);
  for (int trial = 0; trial < 100; ++trial) {
    auto v = testing::random_convex_quad(rng, 0.05);
    const Vec2 t{shift(rng), shift(rng)};
    std::array<Point2, 4> moved = v;
    for (Point2& p : moved) p = p + t;
    const PoleSet a = compute_poles(validate_quad(v));
    const PoleSet b = compute_poles(validate_quad(moved));
    const Point2 a5 = std::get<Point2>(a.pole5), b5 = std::get<Point2>(b.pole5);
    const Point2 a6 = std::get<Point2>(a.pole6), b6 = std::get<Point2>(b.pole6);
    const double scale = std::max({1.0, norm(a5), norm(a6), norm(t)});
    EXPECT_LT(norm((a5 + t) - b5) / scale, 1e-9);
    EXPECT_LT(norm((a6 + t) - b6) / scale, 1e-9);
  }
}

TEST(ComputePoles, PropertyParallelogramsHaveNoFinitePole) {
  testing::Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const PoleSet poles = compute_poles(validate_quad(testing::random_parallelogram(rng)));
    EXPECT_FALSE(is_finite(poles.pole5));
    EXPECT_FALSE(is_finite(poles.pole6));
  }
}

TEST(MidpointFrame, Example) {
  const MidpointFrame f = midpoint_frame(example_quad());
  EXPECT_EQ(f.r7, (Point2{2.5, 1.5}));
  EXPECT_EQ(f.r8, (Point2{3.5, 3.0}));
  EXPECT_EQ(f.r9, (Point2{2.5, 4.5}));
  EXPECT_EQ(f.r10, (Point2{1.5, 3.0}));
  EXPECT_EQ(f.rg, (Point2{2.5, 3.0}));
}

TEST(MidpointFrame, SquareAndParallelogram) {
  EXPECT_EQ(midpoint_frame(unit_square()).rg, (Point2{0.5, 0.5}));
  const MidpointFrame f = midpoint_frame(validate_quad(std::array<Point2, 4>{{{0, 0}, {2, 0}, {3, 1}, {1, 1}}}));
  EXPECT_EQ(f.rg, (Point2{1.5, 0.5}));
  EXPECT_EQ(f.r8, (Point2{2.5, 0.5}));
}

TEST(MidpointFrame, PropertyCentroidIsMeanOfOppositeMidpoints) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const MidpointFrame f = midpoint_frame(validate_quad(testing::random_convex_quad(rng)));
    const Point2 a = 0.5 * (f.r7 + f.r9), b = 0.5 * (f.r8 + f.r10);
    EXPECT_LT(norm(a - f.rg), 1e-12 * (1.0 + norm(f.rg)));
    EXPECT_LT(norm(b - f.rg), 1e-12 * (1.0 + norm(f.rg)));
  }
}

TEST(ShoelaceArea, Fixtures) {
  EXPECT_DOUBLE_EQ(shoelace_area(example_quad()), 6.0);
  EXPECT_DOUBLE_EQ(testing::oracle_area(kExampleVertices), 6.0);
  EXPECT_DOUBLE_EQ(shoelace_area(unit_square()), 1.0);
  EXPECT_DOUBLE_EQ(shoelace_area(validate_quad(std::array<Point2, 4>{{{0, 0}, {2, 0}, {3, 1}, {1, 1}}})), 2.0);
}

TEST(ShoelaceArea, PropertyParallelogramIsCrossProduct) {
  testing::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto v = testing::random_parallelogram(rng);
    const double expected = std::abs(cross(v[1] - v[0], v[3] - v[0]));
    EXPECT_NEAR(shoelace_area(validate_quad(v)), expected, 1e-12 * (1.0 + expected));
  }
}

TEST(ShoelaceArea, PropertyMatchesHeronOracleOnConvexQuads) {
  testing::Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto v = testing::random_convex_quad(rng);
    const double oracle = testing::oracle_area(v);
    EXPECT_NEAR(shoelace_area(validate_quad(v)), oracle, 1e-9 * oracle);
  }
}

TEST(ValidateQuad, AcceptsExampleAndNonConvexSimpleQuad) {
  EXPECT_NO_THROW(validate_quad(kExampleVertices));
  // Dart: simple but not convex.
  EXPECT_NO_THROW(validate_quad(std::array<Point2, 4>{{{0, 0}, {2, 1}, {4, 0}, {2, 3}}}));
}

TEST(ValidateQuad, RejectsWithReason) {
  EXPECT_EQ(reason_of({{{0, 0}, {1, 1}, {1, 0}, {0, 1}}}), DegeneracyReason::kSelfIntersecting);
  EXPECT_EQ(reason_of({{{0, 0}, {1, 0}, {2, 0}, {0, 1}}}), DegeneracyReason::kCollinearTriple);
  EXPECT_EQ(reason_of({{{0, 0}, {0, 0}, {1, 1}, {0, 1}}}), DegeneracyReason::kCoincidentVertices);
  EXPECT_EQ(reason_of({{{0, 0}, {0, 1}, {1, 1}, {1, 0}}}), DegeneracyReason::kClockwise);
}

TEST(ValidateQuad, NeverReorders) {
  const Quad q = example_quad();
  for (int i = 0; i < 4; ++i) EXPECT_EQ(q.vertices()[i], kExampleVertices[i]);
  EXPECT_EQ(q.node(2), (Point2{4, 2}));
}

}  // namespace
}  // namespace quadmap
