#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chull/sampling.hpp"

namespace chull {

inline constexpr int kMaxOrthantDimension = 20;

// Entry i is +1 or -1; coordinate i is multiplied by it.
using SignVector = std::vector<int>;

// Sign vector number `mask` of dimension d: bit i set means s_i = -1.
SignVector sign_vector(unsigned mask, int d);

// Pareto maxima: indices of points not dominated by another point that is
// >= in every coordinate and > in at least one. Coincident points do not
// dominate each other. Ascending indices. Throws on mixed dimensions.
std::vector<std::size_t> maxima(std::span<const PointD> S);

// Points whose open positive orthant holds no other point (no point is
// strictly greater in every coordinate). Ascending indices.
std::vector<std::size_t> strict_maxima(std::span<const PointD> S);

struct OrthantExposure {
  std::vector<std::size_t> indices;  // ascending
  std::size_t n_sc = 0;
};

// Union over all 2^d sign vectors s of the points p with q_s(p) free of S.
// Throws "orthant count overflow" for d > 20.
OrthantExposure orthant_exposed(std::span<const PointD> S);

// Multiply coordinate i of every point by s[i].
std::vector<PointD> flip(std::span<const PointD> S, const SignVector& s);

// Dimension shared by all points; throws on empty input or mixed dimensions.
int common_dimension(std::span<const PointD> S);

}  // namespace chull
