#include "chull/orthant_hull.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace chull {

namespace {

// Row-major n x d coordinates.
struct Flat {
  std::size_t n = 0;
  int d = 0;
  std::vector<double> c;

  const double* row(std::size_t i) const { return c.data() + i * d; }
};

Flat flatten(std::span<const PointD> S, int d) {
  Flat f{S.size(), d, {}};
  f.c.reserve(S.size() * d);
  for (const auto& p : S) f.c.insert(f.c.end(), p.begin(), p.end());
  return f;
}

bool strictly_greater(const double* q, const double* p, int d) {
  for (int i = 0; i < d; ++i)
    if (!(q[i] > p[i])) return false;
  return true;
}

bool weakly_dominates(const double* q, const double* p, int d) {
  bool strict = false;
  for (int i = 0; i < d; ++i) {
    if (q[i] < p[i]) return false;
    strict |= q[i] > p[i];
  }
  return strict;
}

// Points are visited in lexicographically descending order, so any dominator
// of a point is visited before it. A non-maximal dominator is itself
// dominated by a maximal one, so checking the maxima found so far is enough.
// Move-to-front keeps the frequent dominators at the head of the scan.
template <class Dominates>
std::vector<std::size_t> prune_maxima(const Flat& f, Dominates dominates) {
  std::vector<std::size_t> order(f.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const double* a = f.row(i);
    const double* b = f.row(j);
    for (int k = 0; k < f.d; ++k)
      if (a[k] != b[k]) return a[k] > b[k];
    return i < j;
  });
  std::vector<std::size_t> found;
  std::vector<std::size_t> scan;
  for (std::size_t i : order) {
    bool beaten = false;
    for (std::size_t k = 0; k < scan.size(); ++k) {
      if (dominates(f.row(scan[k]), f.row(i), f.d)) {
        std::rotate(scan.begin(), scan.begin() + k, scan.begin() + k + 1);
        beaten = true;
        break;
      }
    }
    if (!beaten) {
      found.push_back(i);
      scan.insert(scan.begin(), i);
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

// d = 2 strict maxima: sort by x descending, running max of y over larger x.
std::vector<std::size_t> strict_maxima_plane(const Flat& f) {
  std::vector<std::size_t> order(f.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const double xi = f.row(i)[0], xj = f.row(j)[0];
    return xi > xj || (xi == xj && i < j);
  });
  std::vector<std::size_t> out;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t g = 0; g < order.size();) {
    std::size_t h = g;
    double group = best;
    for (; h < order.size() && f.row(order[h])[0] == f.row(order[g])[0]; ++h) {
      const double y = f.row(order[h])[1];
      if (!(best > y)) out.push_back(order[h]);
      group = std::max(group, y);
    }
    best = group;
    g = h;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> strict_maxima_flat(const Flat& f) {
  if (f.d == 2) return strict_maxima_plane(f);
  if (f.d == 1) {
    // Only the maximum value(s) have an empty open ray.
    const double top = *std::max_element(f.c.begin(), f.c.end());
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < f.n; ++i)
      if (f.c[i] == top) out.push_back(i);
    return out;
  }
  return prune_maxima(f, strictly_greater);
}

}  // namespace

SignVector sign_vector(unsigned mask, int d) {
  SignVector s(d);
  for (int i = 0; i < d; ++i) s[i] = (mask >> i) & 1u ? -1 : 1;
  return s;
}

int common_dimension(std::span<const PointD> S) {
  if (S.empty()) throw std::invalid_argument("empty point set");
  const std::size_t d = S[0].size();
  if (d == 0) throw std::invalid_argument("points must have dimension >= 1");
  for (const auto& p : S) {
    if (p.size() != d) throw std::invalid_argument("mixed dimensions");
    for (double c : p)
      if (!std::isfinite(c)) throw std::invalid_argument("non-finite coordinate");
  }
  return static_cast<int>(d);
}

std::vector<std::size_t> maxima(std::span<const PointD> S) {
  const int d = common_dimension(S);
  return prune_maxima(flatten(S, d), weakly_dominates);
}

std::vector<std::size_t> strict_maxima(std::span<const PointD> S) {
  const int d = common_dimension(S);
  return strict_maxima_flat(flatten(S, d));
}

std::vector<PointD> flip(std::span<const PointD> S, const SignVector& s) {
  std::vector<PointD> out(S.begin(), S.end());
  for (auto& p : out)
    for (std::size_t i = 0; i < p.size(); ++i)
      if (s[i] < 0) p[i] = -p[i];
  return out;
}

OrthantExposure orthant_exposed(std::span<const PointD> S) {
  const int d = common_dimension(S);
  if (d > kMaxOrthantDimension) throw std::invalid_argument("orthant count overflow");
  const Flat base = flatten(S, d);
  Flat flipped = base;
  std::vector<char> hit(S.size(), 0);
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    for (std::size_t k = 0; k < base.c.size(); ++k)
      flipped.c[k] = (mask >> (k % d)) & 1u ? -base.c[k] : base.c[k];
    for (std::size_t i : strict_maxima_flat(flipped)) hit[i] = 1;
  }
  OrthantExposure out;
  for (std::size_t i = 0; i < S.size(); ++i)
    if (hit[i]) out.indices.push_back(i);
  out.n_sc = out.indices.size();
  return out;
}

}  // namespace chull
