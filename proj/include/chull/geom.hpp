#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace chull {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

// Throws std::invalid_argument on NaN/Inf.
Point2 make_point(double x, double y);

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }

// Sign of the signed area of triangle pqr: +1 counter-clockwise, -1
// clockwise, 0 collinear. Plain floating determinant, no epsilon.
int orient(Point2 p, Point2 q, Point2 r);

// Counter-clockwise, strictly convex vertex list. One- and two-vertex
// polygons are allowed and stand for a point and a segment.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;

  // Validates the invariants; throws std::invalid_argument on violation.
  explicit ConvexPolygon(std::vector<Point2> vertices);

  std::span<const Point2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }

 private:
  struct Unchecked {};
  ConvexPolygon(Unchecked, std::vector<Point2> vertices)
      : vertices_(std::move(vertices)) {}

  friend ConvexPolygon convex_hull(std::span<const Point2> points);

  std::vector<Point2> vertices_;
};

// Andrew's monotone chain. Collinear boundary points are dropped.
// Throws std::invalid_argument("empty point set") on empty input.
ConvexPolygon convex_hull(std::span<const Point2> points);

// Shoelace area; zero for point and segment polygons.
double polygon_area(const ConvexPolygon& poly);

// Boundary inclusive.
bool point_in_convex_polygon(Point2 x, const ConvexPolygon& poly);

// Maximum of <p, normal> over the arc radius*(cos t, sin t),
// t in [theta_lo, theta_hi].
double arc_max_along_normal(double radius, double theta_lo, double theta_hi,
                            Point2 normal);

}  // namespace chull
