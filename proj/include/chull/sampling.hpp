#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "chull/geom.hpp"

namespace chull {

using PointD = std::vector<double>;

// Counter-based stream: draw k is mix64(key + (k + 1) * golden), with the key
// derived from (master_seed, stream_index). Replaying a pair reproduces the
// sequence no matter which thread or in which order streams are created.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

  std::uint64_t next_u64();
  // Uniform in [0, 1) with 53 random bits.
  double next_double();

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

RngStream substream(std::uint64_t master_seed, std::uint64_t index);

struct Disk {
  double radius = 1.0;
};

struct Triangle {
  Point2 a, b, c;
};

struct Polygon {
  ConvexPolygon poly;
};

struct Hypercube {
  int d = 2;
  double side = 1.0;
};

class Region {
 public:
  using Variant = std::variant<Disk, Triangle, Polygon, Hypercube>;

  // Each constructor validates (positive measure, non-collinear triangle, ...).
  static Region disk(double radius = 1.0);
  static Region triangle(Point2 a, Point2 b, Point2 c);
  static Region polygon(ConvexPolygon poly);
  static Region hypercube(int d, double side = 1.0);
  // Unit square [0,1]^2 as a 2-cube.
  static Region unit_square() { return hypercube(2, 1.0); }
  // Regular k-gon inscribed in the circle of given radius, first vertex at
  // angle 0.
  static Region regular_polygon(int k, double radius = 1.0);

  const Variant& shape() const { return shape_; }
  int dimension() const;
  bool planar() const { return dimension() == 2; }
  double measure() const;

  bool contains(Point2 p) const;
  bool contains(const PointD& p) const;

 private:
  explicit Region(Variant v) : shape_(std::move(v)) {}
  Variant shape_;
  // Fan triangulation from vertex 0, cumulative areas (Polygon only).
  std::vector<double> fan_cdf_;

  friend Point2 sample_point2(const Region&, RngStream&);
};

// Uniform point of a planar region (Disk, Triangle, Polygon, Hypercube d=2).
Point2 sample_point2(const Region& region, RngStream& rng);
// Uniform point of any region, as a d-vector.
PointD sample(const Region& region, RngStream& rng);

std::vector<Point2> sample_points2(const Region& region, RngStream& rng,
                                   std::size_t n);
std::vector<PointD> sample_pointsd(const Region& region, RngStream& rng,
                                   std::size_t n);

Point2 sample_triangle(Point2 a, Point2 b, Point2 c, RngStream& rng);

}  // namespace chull
