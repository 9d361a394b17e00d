#pragma once

// Brute-force references for the fast paths. Quadratic or worse; inputs
// larger than kOracleLimit points are rejected.

#include <cstddef>
#include <span>
#include <vector>

#include "chull/directed_hull.hpp"
#include "chull/geom.hpp"
#include "chull/sampling.hpp"

namespace chull::oracle {

inline constexpr std::size_t kOracleLimit = 4096;

// For every point and every family of quadrant_family(D), scan all other
// points for membership in the open translate anchored at the point.
std::vector<std::size_t> naive_exposed(std::span<const Point2> S, const DirectionSet& D);

// Pairwise Pareto dominance scan.
std::vector<std::size_t> naive_maxima(std::span<const PointD> S);

// Every point, every sign vector, every other point.
std::vector<std::size_t> naive_orthant_exposed(std::span<const PointD> S);

// Closed cone / halfplane at x must meet S for every family.
bool naive_contains(std::span<const Point2> S, const DirectionSet& D, Point2 x);

// Open-cone emptiness of one family anchored at S[anchor].
bool naive_cone_empty(std::span<const Point2> S, std::size_t anchor, const ConeFamily& family);

}  // namespace chull::oracle
