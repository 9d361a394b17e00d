#include "chull/oracle.hpp"

#include <stdexcept>

namespace chull::oracle {

namespace {

void guard(std::size_t n) {
  if (n > kOracleLimit) throw std::length_error("oracle size guard exceeded");
}

double det(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }

// Offset y lies in the open (strict) or closed cone of the family.
bool in_cone(const ConeFamily& f, Point2 y, bool closed) {
  if (f.is_wedge()) {
    const auto& w = f.as_wedge();
    const double s1 = det(w.u1, y);
    const double s2 = det(y, w.u2);
    return closed ? (s1 >= 0.0 && s2 >= 0.0) : (s1 > 0.0 && s2 > 0.0);
  }
  const auto& n = f.as_halfplane().normal;
  const double s = n.x * y.x + n.y * y.y;
  return closed ? s >= 0.0 : s > 0.0;
}

}  // namespace

bool naive_cone_empty(std::span<const Point2> S, std::size_t anchor, const ConeFamily& family) {
  guard(S.size());
  const Point2 p = S[anchor];
  for (std::size_t j = 0; j < S.size(); ++j) {
    if (j == anchor) continue;
    if (in_cone(family, {S[j].x - p.x, S[j].y - p.y}, false)) return false;
  }
  return true;
}

std::vector<std::size_t> naive_exposed(std::span<const Point2> S, const DirectionSet& D) {
  guard(S.size());
  const auto families = quadrant_family(D);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (const auto& f : families) {
      if (naive_cone_empty(S, i, f)) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

std::vector<std::size_t> naive_maxima(std::span<const PointD> S) {
  guard(S.size());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < S.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < S.size() && !dominated; ++j) {
      if (S[j].size() != S[i].size()) throw std::invalid_argument("mixed dimensions");
      bool ge = true, gt = false;
      for (std::size_t k = 0; k < S[i].size(); ++k) {
        ge &= S[j][k] >= S[i][k];
        gt |= S[j][k] > S[i][k];
      }
      dominated = ge && gt;
    }
    if (!dominated) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> naive_orthant_exposed(std::span<const PointD> S) {
  guard(S.size());
  if (S.empty()) return {};
  const std::size_t d = S[0].size();
  if (d > 20) throw std::invalid_argument("orthant count overflow");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      bool empty = true;
      for (std::size_t j = 0; j < S.size() && empty; ++j) {
        if (j == i) continue;
        bool inside = true;
        for (std::size_t k = 0; k < d && inside; ++k) {
          const double diff = S[j][k] - S[i][k];
          inside = (mask >> k) & 1u ? diff < 0.0 : diff > 0.0;
        }
        empty = !inside;
      }
      if (empty) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

bool naive_contains(std::span<const Point2> S, const DirectionSet& D, Point2 x) {
  guard(S.size());
  for (const auto& f : quadrant_family(D)) {
    bool met = false;
    for (const auto& q : S)
      if (in_cone(f, {q.x - x.x, q.y - x.y}, true)) {
        met = true;
        break;
      }
    if (!met) return false;
  }
  return true;
}

}  // namespace chull::oracle
