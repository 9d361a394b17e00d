#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "chull/geom.hpp"
#include "chull/sampling.hpp"

using namespace chull;

TEST(Orient, Examples) {
  EXPECT_EQ(orient({0, 0}, {1, 0}, {0, 1}), 1);
  EXPECT_EQ(orient({0, 0}, {1, 1}, {2, 2}), 0);
  EXPECT_EQ(orient({0, 0}, {0, 1}, {1, 0}), -1);
}

TEST(Orient, Antisymmetric) {
  RngStream rng = substream(3, 0);
  for (int i = 0; i < 1000; ++i) {
    Point2 p{rng.next_double(), rng.next_double()};
    Point2 q{rng.next_double(), rng.next_double()};
    Point2 r{rng.next_double(), rng.next_double()};
    EXPECT_EQ(orient(p, q, r), -orient(p, r, q));
  }
}

TEST(MakePoint, RejectsNonFinite) {
  EXPECT_THROW(make_point(NAN, 0), std::invalid_argument);
  EXPECT_THROW(make_point(0, INFINITY), std::invalid_argument);
  EXPECT_EQ(make_point(1, 2), (Point2{1, 2}));
}

TEST(ConvexHull, Singleton) {
  const std::vector<Point2> s{{0, 0}};
  const auto h = convex_hull(s);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0], (Point2{0, 0}));
}

TEST(ConvexHull, DropsInteriorPoint) {
  const std::vector<Point2> s{{0, 0}, {1, 0}, {0, 1}, {0.25, 0.25}};
  EXPECT_EQ(convex_hull(s).size(), 3u);
}

TEST(ConvexHull, DropsCollinearBoundaryPoints) {
  const std::vector<Point2> s{{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 2}};
  EXPECT_EQ(convex_hull(s).size(), 4u);
}

TEST(ConvexHull, CollinearInputGivesSegment) {
  const std::vector<Point2> s{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  const auto h = convex_hull(s);
  EXPECT_EQ(h.size(), 2u);
  EXPECT_EQ(polygon_area(h), 0.0);
}

TEST(ConvexHull, DuplicatesCollapse) {
  const std::vector<Point2> s{{1, 1}, {1, 1}, {1, 1}};
  EXPECT_EQ(convex_hull(s).size(), 1u);
}

TEST(ConvexHull, EmptyThrows) {
  const std::vector<Point2> s;
  try {
    convex_hull(s);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "empty point set");
  }
}

TEST(ConvexHull, ContainsEveryInputAndIsIdempotent) {
  const Region disk = Region::disk();
  for (int t = 0; t < 20; ++t) {
    RngStream rng = substream(11, t);
    const auto s = sample_points2(disk, rng, 1000);
    const auto h = convex_hull(s);
    for (const auto& p : s) ASSERT_TRUE(point_in_convex_polygon(p, h));
    const std::vector<Point2> verts(h.vertices().begin(), h.vertices().end());
    const auto h2 = convex_hull(verts);
    ASSERT_EQ(h2.size(), h.size());
    for (std::size_t i = 0; i < h.size(); ++i) EXPECT_EQ(h2[i], h[i]);
  }
}

TEST(ConvexHull, AreaMonotoneUnderSupersets) {
  RngStream rng = substream(12, 0);
  std::vector<Point2> s;
  double prev = 0.0;
  for (int i = 0; i < 300; ++i) {
    s.push_back({rng.next_double(), rng.next_double()});
    const double a = polygon_area(convex_hull(s));
    EXPECT_GE(a, prev);
    prev = a;
  }
}

TEST(ConvexPolygon, ValidatesInvariants) {
  EXPECT_NO_THROW(ConvexPolygon({{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_THROW(ConvexPolygon({{0, 0}, {0, 1}, {1, 0}}), std::invalid_argument);         // clockwise
  EXPECT_THROW(ConvexPolygon({{0, 0}, {1, 0}, {2, 0}, {0, 1}}), std::invalid_argument); // collinear
}

TEST(PolygonArea, Examples) {
  EXPECT_DOUBLE_EQ(polygon_area(ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}})), 1.0);
  EXPECT_EQ(polygon_area(ConvexPolygon({{0, 0}, {1, 1}})), 0.0);
  std::vector<Point2> hex;
  for (int i = 0; i < 6; ++i) hex.push_back({std::cos(i * std::numbers::pi / 3), std::sin(i * std::numbers::pi / 3)});
  EXPECT_NEAR(polygon_area(ConvexPolygon(hex)), 3.0 * std::sqrt(3.0) / 2.0, 1e-12);
}

TEST(PointInConvexPolygon, Examples) {
  const ConvexPolygon tri({{0, 0}, {1, 0}, {0, 1}});
  EXPECT_TRUE(point_in_convex_polygon({1.0 / 3, 1.0 / 3}, tri));
  EXPECT_TRUE(point_in_convex_polygon({1, 0}, tri));
  EXPECT_TRUE(point_in_convex_polygon({0.5, 0}, tri));
  const ConvexPolygon sq({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  EXPECT_FALSE(point_in_convex_polygon({2, 2}, sq));
}

TEST(PointInConvexPolygon, DegeneratePolygons) {
  const ConvexPolygon pt({{1, 1}});
  EXPECT_TRUE(point_in_convex_polygon({1, 1}, pt));
  EXPECT_FALSE(point_in_convex_polygon({1, 1.5}, pt));
  const ConvexPolygon seg({{0, 0}, {2, 2}});
  EXPECT_TRUE(point_in_convex_polygon({1, 1}, seg));
  EXPECT_FALSE(point_in_convex_polygon({3, 3}, seg));
  EXPECT_FALSE(point_in_convex_polygon({1, 1.1}, seg));
}

TEST(ArcMax, Examples) {
  const double pi = std::numbers::pi;
  EXPECT_NEAR(arc_max_along_normal(1, -pi / 8, pi / 8, {1, 0}), 1.0, 1e-15);
  EXPECT_NEAR(arc_max_along_normal(1, pi / 4, pi / 2, {1, 0}), std::cos(pi / 4), 1e-15);
  EXPECT_NEAR(arc_max_along_normal(2, 0, 2 * pi, {0, 3}), 6.0, 1e-12);
}

TEST(ArcMax, Errors) {
  EXPECT_THROW(arc_max_along_normal(1, 0, 1, {0, 0}), std::invalid_argument);
  EXPECT_THROW(arc_max_along_normal(0, 0, 1, {1, 0}), std::invalid_argument);
  EXPECT_THROW(arc_max_along_normal(1, 1, 0, {1, 0}), std::invalid_argument);
}

TEST(ArcMax, AgreesWithDenseSampling) {
  RngStream rng = substream(13, 0);
  for (int t = 0; t < 200; ++t) {
    const double r = 0.1 + 2 * rng.next_double();
    const double lo = -7 + 14 * rng.next_double();
    const double span = 2 * std::numbers::pi * rng.next_double();
    const Point2 n{rng.next_double() - 0.5, rng.next_double() - 0.5};
    constexpr int kSamples = 10000;
    double best = -1e300;
    for (int k = 0; k <= kSamples; ++k) {
      const double th = lo + span * k / kSamples;
      best = std::max(best, r * (std::cos(th) * n.x + std::sin(th) * n.y));
    }
    const double exact = arc_max_along_normal(r, lo, lo + span, n);
    // Dense sampling can only undershoot, by at most r |n| (1 - cos(step / 2)).
    const double step = span / kSamples;
    const double slack = r * std::hypot(n.x, n.y) * (1 - std::cos(step / 2)) + 1e-12;
    EXPECT_GE(exact + 1e-12, best);
    EXPECT_LE(exact - best, std::max(slack, 1e-9));
  }
}
