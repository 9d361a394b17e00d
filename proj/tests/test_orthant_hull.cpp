#include <gtest/gtest.h>

#include <algorithm>

#include "chull/geom.hpp"
#include "chull/oracle.hpp"
#include "chull/orthant_hull.hpp"
#include "chull/sampling.hpp"

using namespace chull;

namespace {

const std::vector<PointD> kFour = {{1, 3}, {2, 2}, {3, 1}, {0, 0}};

bool subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST(SignVector, Bits) {
  EXPECT_EQ(sign_vector(0, 3), (SignVector{1, 1, 1}));
  EXPECT_EQ(sign_vector(5, 3), (SignVector{-1, 1, -1}));
}

TEST(Maxima, Examples) {
  EXPECT_EQ(maxima(kFour), (std::vector<std::size_t>{0, 1, 2}));
  const std::vector<PointD> one{{0.5, 0.5, 0.5}};
  EXPECT_EQ(maxima(one), std::vector<std::size_t>{0});
}

TEST(Maxima, EqualPointsAllRetained) {
  const std::vector<PointD> s(5, PointD{1, 2, 3});
  EXPECT_EQ(maxima(s).size(), 5u);
}

TEST(Maxima, WeakDominanceRemoves) {
  // (1,2) is >= (1,1) everywhere and > in one coordinate.
  const std::vector<PointD> s{{1, 1}, {1, 2}};
  EXPECT_EQ(maxima(s), std::vector<std::size_t>{1});
  EXPECT_EQ(strict_maxima(s), (std::vector<std::size_t>{0, 1}));
}

TEST(Maxima, MixedDimensionsThrow) {
  const std::vector<PointD> s{{1, 2}, {1, 2, 3}};
  EXPECT_THROW(maxima(s), std::invalid_argument);
  EXPECT_THROW(orthant_exposed(s), std::invalid_argument);
  const std::vector<PointD> empty;
  EXPECT_THROW(common_dimension(empty), std::invalid_argument);
}

TEST(Maxima, MatchesOracle) {
  for (int d : {2, 3, 4, 5}) {
    for (int t = 0; t < 10; ++t) {
      RngStream rng = substream(40 + d, t);
      const auto s = sample_pointsd(Region::hypercube(d), rng, 200);
      EXPECT_EQ(maxima(s), oracle::naive_maxima(s));
    }
  }
}

TEST(OrthantExposed, Examples) {
  const auto r = orthant_exposed(kFour);
  EXPECT_EQ(r.indices, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(r.n_sc, 4u);
  const std::vector<PointD> two{{0.1, 0.2, 0.3}, {0.2, 0.3, 0.4}};
  EXPECT_EQ(orthant_exposed(two).n_sc, 2u);
}

TEST(OrthantExposed, InteriorPointHidden) {
  // Centre of a 3x3 grid has a point in every open quadrant.
  std::vector<PointD> s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s.push_back({double(i), double(j)});
  const auto r = orthant_exposed(s);
  EXPECT_EQ(std::count(r.indices.begin(), r.indices.end(), 4u), 0);
  EXPECT_EQ(r.n_sc, 8u);
}

TEST(OrthantExposed, DuplicatesStayExposed) {
  const std::vector<PointD> s{{0.5, 0.5}, {0.5, 0.5}};
  EXPECT_EQ(orthant_exposed(s).n_sc, 2u);
}

TEST(OrthantExposed, OverflowGuard) {
  const std::vector<PointD> s{PointD(21, 0.5)};
  try {
    orthant_exposed(s);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "orthant count overflow");
  }
}

TEST(OrthantExposed, MatchesOracle3d) {
  for (int t = 0; t < 5; ++t) {
    RngStream rng = substream(50, t);
    const auto s = sample_pointsd(Region::hypercube(3), rng, 256);
    EXPECT_EQ(orthant_exposed(s).indices, oracle::naive_orthant_exposed(s));
  }
}

TEST(OrthantExposed, ContainsMaxima) {
  for (int d : {2, 3, 4}) {
    RngStream rng = substream(51, d);
    const auto s = sample_pointsd(Region::hypercube(d), rng, 500);
    EXPECT_TRUE(subset(maxima(s), orthant_exposed(s).indices));
  }
}

TEST(OrthantExposed, HullVerticesExposedIn2d) {
  for (int t = 0; t < 10; ++t) {
    RngStream rng = substream(52, t);
    const auto s = sample_pointsd(Region::hypercube(2), rng, 400);
    std::vector<Point2> p;
    for (const auto& q : s) p.push_back({q[0], q[1]});
    const auto hull = convex_hull(p);
    const auto exposed = orthant_exposed(s).indices;
    for (const auto& v : hull.vertices()) {
      const auto it = std::find(p.begin(), p.end(), v);
      ASSERT_NE(it, p.end());
      EXPECT_TRUE(std::binary_search(exposed.begin(), exposed.end(), static_cast<std::size_t>(it - p.begin())));
    }
  }
}

TEST(OrthantExposed, InvariantUnderPermutationAndFlip) {
  RngStream rng = substream(53, 0);
  const auto s = sample_pointsd(Region::hypercube(3), rng, 300);
  const auto base = orthant_exposed(s).indices;
  std::vector<PointD> perm;
  for (const auto& p : s) perm.push_back({p[2], p[0], p[1]});
  EXPECT_EQ(orthant_exposed(perm).indices, base);
  for (unsigned mask = 0; mask < 8; ++mask)
    EXPECT_EQ(orthant_exposed(flip(s, sign_vector(mask, 3))).indices, base);
}
