#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <unordered_set>

#include "chull/sampling.hpp"

using namespace chull;

namespace {

// Pearson statistic over `cells` equiprobable bins; the 0.999 quantile for
// 99 degrees of freedom is about 148.2.
double chi_square(const std::vector<int>& counts, double expected) {
  double x = 0.0;
  for (int c : counts) x += (c - expected) * (c - expected) / expected;
  return x;
}

constexpr double kChi99 = 148.23;

}  // namespace

TEST(Rng, SameSeedAndIndexReplays) {
  RngStream a = substream(42, 0), b = substream(42, 0);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_double(), b.next_double());
}

TEST(Rng, NeighbouringStreamsDiffer) {
  RngStream a = substream(42, 0), b = substream(42, 1);
  EXPECT_NE(a.next_double(), b.next_double());
}

TEST(Rng, NoFirstDrawCollisionsOver1e4Indices) {
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    RngStream r = substream(42, i);
    EXPECT_TRUE(seen.insert(r.next_u64()).second) << "index " << i;
  }
}

TEST(Rng, DoublesInUnitInterval) {
  RngStream r = substream(1, 1);
  for (int i = 0; i < 100000; ++i) {
    const double u = r.next_double();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Rng, CounterAdvances) {
  RngStream r = substream(9, 4);
  EXPECT_EQ(r.counter(), 0u);
  r.next_u64();
  r.next_double();
  EXPECT_EQ(r.counter(), 2u);
  EXPECT_EQ(r.master_seed(), 9u);
  EXPECT_EQ(r.stream_index(), 4u);
}

TEST(Region, ConstructorsValidate) {
  EXPECT_THROW(Region::disk(0), std::invalid_argument);
  EXPECT_THROW(Region::triangle({0, 0}, {1, 1}, {2, 2}), std::invalid_argument);
  EXPECT_THROW(Region::hypercube(0), std::invalid_argument);
  EXPECT_THROW(Region::hypercube(2, -1), std::invalid_argument);
  EXPECT_THROW(Region::regular_polygon(2), std::invalid_argument);
}

TEST(Region, Measures) {
  EXPECT_NEAR(Region::disk(2).measure(), 4 * std::numbers::pi, 1e-12);
  EXPECT_NEAR(Region::triangle({0, 0}, {1, 0}, {0, 1}).measure(), 0.5, 1e-15);
  EXPECT_NEAR(Region::hypercube(3, 2).measure(), 8.0, 1e-15);
  EXPECT_NEAR(Region::regular_polygon(6).measure(), 3 * std::sqrt(3.0) / 2, 1e-12);
  EXPECT_EQ(Region::hypercube(3).dimension(), 3);
  EXPECT_FALSE(Region::hypercube(3).planar());
  EXPECT_TRUE(Region::unit_square().planar());
}

TEST(Sample, DiskMeanRadius) {
  const Region disk = Region::disk();
  RngStream rng = substream(5, 0);
  double sum = 0.0;
  constexpr int kDraws = 1'000'000;
  for (int i = 0; i < kDraws; ++i) {
    const Point2 p = sample_point2(disk, rng);
    sum += std::hypot(p.x, p.y);
  }
  EXPECT_NEAR(sum / kDraws, 2.0 / 3.0, 0.002);
}

TEST(Sample, EverySampleInsideItsRegion) {
  const std::vector<Region> regions = {
      Region::disk(), Region::disk(3), Region::unit_square(), Region::hypercube(4, 2),
      Region::triangle({0, 0}, {1, 0}, {0, 1}), Region::regular_polygon(7),
      Region::polygon(ConvexPolygon({{0, 0}, {3, 0}, {4, 2}, {1, 3}}))};
  for (std::size_t k = 0; k < regions.size(); ++k) {
    RngStream rng = substream(6, k);
    for (int i = 0; i < 20000; ++i) ASSERT_TRUE(regions[k].contains(sample(regions[k], rng))) << k;
  }
}

TEST(Sample, SameStreamSameSequence) {
  const Region r = Region::regular_polygon(5);
  RngStream a = substream(7, 3), b = substream(7, 3);
  EXPECT_EQ(sample_points2(r, a, 500), sample_points2(r, b, 500));
}

TEST(Sample, PlanarSamplerRejectsHigherDimension) {
  RngStream rng = substream(1, 0);
  EXPECT_THROW(sample_point2(Region::hypercube(3), rng), std::invalid_argument);
}

TEST(Sample, SquareChiSquare) {
  const Region sq = Region::unit_square();
  RngStream rng = substream(8, 0);
  std::vector<int> counts(100, 0);
  constexpr int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) {
    const Point2 p = sample_point2(sq, rng);
    ++counts[static_cast<int>(p.x * 10) * 10 + static_cast<int>(p.y * 10)];
  }
  EXPECT_LT(chi_square(counts, kDraws / 100.0), kChi99);
}

TEST(Sample, DiskChiSquare) {
  // 10 equal-area rings x 10 sectors.
  const Region disk = Region::disk();
  RngStream rng = substream(8, 1);
  std::vector<int> counts(100, 0);
  constexpr int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) {
    const Point2 p = sample_point2(disk, rng);
    const int ring = std::min(9, static_cast<int>((p.x * p.x + p.y * p.y) * 10));
    double a = std::atan2(p.y, p.x);
    if (a < 0) a += 2 * std::numbers::pi;
    const int sector = std::min(9, static_cast<int>(a / (2 * std::numbers::pi) * 10));
    ++counts[ring * 10 + sector];
  }
  EXPECT_LT(chi_square(counts, kDraws / 100.0), kChi99);
}

TEST(Sample, TriangleChiSquare) {
  // With barycentric (u, v): s = u + v has s^2 ~ U(0,1) and v / s ~ U(0,1),
  // independently, which gives 100 equiprobable cells.
  const Point2 a{0, 0}, b{2, 0}, c{0.5, 1.5};
  const Region tri = Region::triangle(a, b, c);
  RngStream rng = substream(8, 2);
  std::vector<int> counts(100, 0);
  constexpr int kDraws = 100000;
  const double det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  for (int i = 0; i < kDraws; ++i) {
    const Point2 p = sample_point2(tri, rng);
    const double u = ((p.x - a.x) * (c.y - a.y) - (p.y - a.y) * (c.x - a.x)) / det;
    const double v = ((b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)) / det;
    const double s = u + v;
    const int i1 = std::min(9, static_cast<int>(s * s * 10));
    const int i2 = std::min(9, static_cast<int>(v / s * 10));
    ++counts[i1 * 10 + i2];
  }
  EXPECT_LT(chi_square(counts, kDraws / 100.0), kChi99);
}

TEST(Sample, PolygonChiSquareOverFan) {
  // The six central triangles of a regular hexagon carry equal mass.
  const Region hex = Region::regular_polygon(6);
  RngStream rng = substream(8, 3);
  std::vector<int> counts(6, 0);
  constexpr int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) {
    const Point2 p = sample_point2(hex, rng);
    double ang = std::atan2(p.y, p.x);
    if (ang < 0) ang += 2 * std::numbers::pi;
    ++counts[std::min(5, static_cast<int>(ang / (std::numbers::pi / 3)))];
  }
  // 5 degrees of freedom, 0.999 quantile 20.52.
  EXPECT_LT(chi_square(counts, kDraws / 6.0), 20.52);
}

TEST(Sample, CubeChiSquare) {
  const Region cube = Region::hypercube(4);
  RngStream rng = substream(8, 4);
  std::vector<int> counts(81, 0);
  constexpr int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) {
    const auto p = sample(cube, rng);
    int idx = 0;
    for (double c : p) idx = idx * 3 + std::min(2, static_cast<int>(c * 3));
    ++counts[idx];
  }
  // 80 degrees of freedom, 0.999 quantile 124.84.
  EXPECT_LT(chi_square(counts, kDraws / 81.0), 124.84);
}
