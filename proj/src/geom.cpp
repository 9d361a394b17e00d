#include "chull/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace chull {

Point2 make_point(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y))
    throw std::invalid_argument("non-finite coordinate");
  return {x, y};
}

int orient(Point2 p, Point2 q, Point2 r) {
  const double det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return (det > 0.0) - (det < 0.0);
}

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty())
    throw std::invalid_argument("polygon needs at least one vertex");
  for (const auto& v : vertices_)
    if (!std::isfinite(v.x) || !std::isfinite(v.y))
      throw std::invalid_argument("non-finite coordinate");
  const std::size_t n = vertices_.size();
  if (n == 2 && vertices_[0] == vertices_[1])
    throw std::invalid_argument("repeated polygon vertex");
  if (n < 3) return;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % n];
    const auto& c = vertices_[(i + 2) % n];
    if (orient(a, b, c) <= 0)
      throw std::invalid_argument("polygon is not strictly convex and CCW");
  }
}

ConvexPolygon convex_hull(std::span<const Point2> points) {
  if (points.empty()) throw std::invalid_argument("empty point set");

  std::vector<Point2> p(points.begin(), points.end());
  std::sort(p.begin(), p.end(), [](const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  p.erase(std::unique(p.begin(), p.end()), p.end());

  const std::size_t n = p.size();
  if (n < 3) return ConvexPolygon(ConvexPolygon::Unchecked{}, std::move(p));

  std::vector<Point2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p[i]) <= 0) --k;
    hull[k++] = p[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], p[i]) <= 0) --k;
    hull[k++] = p[i];
  }
  // Last point repeats the first.
  hull.resize(k - 1);
  return ConvexPolygon(ConvexPolygon::Unchecked{}, std::move(hull));
}

double polygon_area(const ConvexPolygon& poly) {
  const auto v = poly.vertices();
  if (v.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0, n = v.size(); i < n; ++i)
    twice += cross(v[i], v[(i + 1) % n]);
  return 0.5 * std::abs(twice);
}

bool point_in_convex_polygon(Point2 x, const ConvexPolygon& poly) {
  const auto v = poly.vertices();
  switch (v.size()) {
    case 0:
      return false;
    case 1:
      return x == v[0];
    case 2:
      return orient(v[0], v[1], x) == 0 &&
             std::min(v[0].x, v[1].x) <= x.x && x.x <= std::max(v[0].x, v[1].x) &&
             std::min(v[0].y, v[1].y) <= x.y && x.y <= std::max(v[0].y, v[1].y);
    default:
      break;
  }
  for (std::size_t i = 0, n = v.size(); i < n; ++i)
    if (orient(v[i], v[(i + 1) % n], x) < 0) return false;
  return true;
}

double arc_max_along_normal(double radius, double theta_lo, double theta_hi,
                            Point2 normal) {
  const double len = std::hypot(normal.x, normal.y);
  if (!(len > 0.0) || !std::isfinite(len))
    throw std::invalid_argument("degenerate normal");
  if (!(radius > 0.0)) throw std::invalid_argument("arc radius must be positive");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double span = theta_hi - theta_lo;
  if (span < 0.0 || span > two_pi * (1.0 + 1e-15))
    throw std::invalid_argument("arc span must lie in [0, 2pi]");

  // Unconstrained maximizer shifted into [theta_lo, theta_lo + 2pi).
  double peak = std::atan2(normal.y, normal.x);
  peak = theta_lo + std::fmod(std::fmod(peak - theta_lo, two_pi) + two_pi, two_pi);
  if (peak <= theta_hi) return radius * len;

  auto value = [&](double t) {
    return radius * (normal.x * std::cos(t) + normal.y * std::sin(t));
  };
  return std::max(value(theta_lo), value(theta_hi));
}

}  // namespace chull
