#pragma once

// Equal-area decompositions of the disk, square, triangle and hypercube.
// Tiles are implicit: an index tuple plus closed-form geometry.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "chull/geom.hpp"
#include "chull/sampling.hpp"

namespace chull {

// Unit disk cut into m sectors and mu rings of equal area. Ring i (1-based,
// outermost first) lies between radius(i) and radius(i - 1), with
// radius(i) = sqrt(1 - i / mu), so every tile has area pi / (m * mu).
class SectorAnnulusTiling {
 public:
  SectorAnnulusTiling(int m, int mu);

  int sectors() const { return m_; }
  int rings() const { return mu_; }
  double radius(int i) const { return radii_[i]; }
  std::span<const double> radii() const { return radii_; }
  double sector_angle() const;
  double sector_start(int j) const { return sector_angle() * j; }
  std::size_t tile_count() const { return static_cast<std::size_t>(m_) * mu_; }
  double tile_area(int ring, int sector) const;

  // 0-based sector and 1-based ring of a point in the unit disk.
  int sector_of(Point2 p) const;
  int ring_of(Point2 p) const;

  // Contained in the hull: corners inside, outer arc below every edge.
  bool tile_inside(int ring, int sector, const ConvexPolygon& hull) const;

 private:
  int m_;
  int mu_;
  std::vector<double> radii_;
};

SectorAnnulusTiling build_sector_annulus(int m, int mu);

// [0, side]^d cut into cells_per_side^d congruent cells.
class GridTiling {
 public:
  GridTiling(int cells_per_side, int d = 2, double side = 1.0);

  int cells_per_side() const { return g_; }
  int dimension() const { return d_; }
  double side() const { return side_; }
  double cell_volume() const;
  // Total cell count as a double (can exceed 64 bits for large d).
  double cell_count() const;
  // Coordinate of grid line k in [0, g].
  double line(int k) const { return k == g_ ? side_ : side_ * k / g_; }

 private:
  int g_;
  int d_;
  double side_;
};

// Triangle split into m equal-area slices from an apex, each cut by mu - 1
// segments parallel to the opposite side at parameters sqrt(i / mu).
class TriangleFanTiling {
 public:
  TriangleFanTiling(Point2 a, Point2 b, Point2 c, int apex, int m, int mu);

  int slices() const { return m_; }
  int bands() const { return mu_; }
  std::size_t tile_count() const { return static_cast<std::size_t>(m_) * mu_; }
  double triangle_area() const;
  // Band is 1-based from the apex; slice is 0-based. A band-1 tile is a
  // triangle and has two coincident corners.
  std::array<Point2, 4> tile_corners(int band, int slice) const;
  double tile_area(int band, int slice) const;

 private:
  Point2 apex_, base0_, base1_;
  int m_;
  int mu_;
};

// Tiles not contained in the hull (partial overlap counts as exposed).
std::size_t exposed_tiles_convex(const SectorAnnulusTiling& tiling, const ConvexPolygon& hull);
std::size_t exposed_tiles_convex(const GridTiling& tiling, const ConvexPolygon& hull);
std::size_t exposed_tiles_convex(const TriangleFanTiling& tiling, const ConvexPolygon& hull);

// Exposed tiles of each sector.
std::vector<int> exposed_per_sector(const SectorAnnulusTiling& tiling, const ConvexPolygon& hull);

// First ring (1-based) of sector j holding a point of S; rings() + 1 when the
// sector is empty.
int first_occupied(const SectorAnnulusTiling& tiling, std::span<const Point2> S, int sector);
std::vector<int> first_occupied_all(const SectorAnnulusTiling& tiling, std::span<const Point2> S);

// Cells with an empty open orthant q_s at their s-extreme corner for some
// sign vector s.
std::uint64_t exposed_hypercube_cells(const GridTiling& grid, std::span<const PointD> S);

}  // namespace chull
