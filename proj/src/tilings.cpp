#include "chull/tilings.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "chull/orthant_hull.hpp"

namespace chull {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool corners_inside(std::span<const Point2> corners, const ConvexPolygon& hull) {
  return std::all_of(corners.begin(), corners.end(),
                     [&](Point2 c) { return point_in_convex_polygon(c, hull); });
}

}  // namespace

SectorAnnulusTiling::SectorAnnulusTiling(int m, int mu) : m_(m), mu_(mu) {
  if (m < 3) throw std::invalid_argument("sector count must be >= 3");
  if (mu < 1) throw std::invalid_argument("ring count must be >= 1");
  radii_.resize(mu + 1);
  radii_[0] = 1.0;
  for (int i = 1; i < mu; ++i)
    radii_[i] = std::sqrt(1.0 - static_cast<double>(i) / mu);
  radii_[mu] = 0.0;
}

SectorAnnulusTiling build_sector_annulus(int m, int mu) { return {m, mu}; }

double SectorAnnulusTiling::sector_angle() const { return kTwoPi / m_; }

double SectorAnnulusTiling::tile_area(int ring, int /*sector*/) const {
  const double ro = radii_[ring - 1], ri = radii_[ring];
  return 0.5 * sector_angle() * (ro * ro - ri * ri);
}

int SectorAnnulusTiling::sector_of(Point2 p) const {
  double t = std::atan2(p.y, p.x);
  if (t < 0.0) t += kTwoPi;
  const int j = static_cast<int>(t / sector_angle());
  return std::clamp(j, 0, m_ - 1);
}

int SectorAnnulusTiling::ring_of(Point2 p) const {
  const double depth = (1.0 - (p.x * p.x + p.y * p.y)) * mu_;
  const int i = static_cast<int>(std::floor(depth)) + 1;
  return std::clamp(i, 1, mu_);
}

bool SectorAnnulusTiling::tile_inside(int ring, int sector, const ConvexPolygon& hull) const {
  if (hull.size() < 3) return false;
  const double t0 = sector_start(sector);
  const double t1 = sector_start(sector + 1);
  const double ro = radii_[ring - 1], ri = radii_[ring];
  const std::array<Point2, 4> corners = {
      Point2{ri * std::cos(t0), ri * std::sin(t0)},
      Point2{ri * std::cos(t1), ri * std::sin(t1)},
      Point2{ro * std::cos(t0), ro * std::sin(t0)},
      Point2{ro * std::cos(t1), ro * std::sin(t1)},
  };
  if (!corners_inside(corners, hull)) return false;
  const auto v = hull.vertices();
  for (std::size_t i = 0, n = v.size(); i < n; ++i) {
    const Point2 e = v[(i + 1) % n] - v[i];
    const Point2 outward{e.y, -e.x};
    if (arc_max_along_normal(ro, t0, t1, outward) > dot(v[i], outward)) return false;
  }
  return true;
}

GridTiling::GridTiling(int cells_per_side, int d, double side)
    : g_(cells_per_side), d_(d), side_(side) {
  if (cells_per_side < 1) throw std::invalid_argument("cells_per_side must be >= 1");
  if (d < 1) throw std::invalid_argument("grid dimension must be >= 1");
  if (!(side > 0.0)) throw std::invalid_argument("grid side must be positive");
}

double GridTiling::cell_volume() const { return std::pow(side_ / g_, d_); }
double GridTiling::cell_count() const { return std::pow(static_cast<double>(g_), d_); }

TriangleFanTiling::TriangleFanTiling(Point2 a, Point2 b, Point2 c, int apex, int m, int mu)
    : m_(m), mu_(mu) {
  if (orient(a, b, c) == 0) throw std::invalid_argument("collinear triangle");
  if (apex < 0 || apex > 2) throw std::invalid_argument("apex index must be 0, 1 or 2");
  if (m < 1 || mu < 1) throw std::invalid_argument("slice and band counts must be >= 1");
  const std::array<Point2, 3> v = {a, b, c};
  apex_ = v[apex];
  base0_ = v[(apex + 1) % 3];
  base1_ = v[(apex + 2) % 3];
}

double TriangleFanTiling::triangle_area() const {
  return 0.5 * std::abs(cross(base0_ - apex_, base1_ - apex_));
}

std::array<Point2, 4> TriangleFanTiling::tile_corners(int band, int slice) const {
  const Point2 p0 = base0_ + (static_cast<double>(slice) / m_) * (base1_ - base0_);
  const Point2 p1 = slice + 1 == m_ ? base1_
                                    : base0_ + (static_cast<double>(slice + 1) / m_) * (base1_ - base0_);
  const double t_in = std::sqrt(static_cast<double>(band - 1) / mu_);
  const double t_out = band == mu_ ? 1.0 : std::sqrt(static_cast<double>(band) / mu_);
  return {apex_ + t_in * (p0 - apex_), apex_ + t_in * (p1 - apex_),
          apex_ + t_out * (p1 - apex_), apex_ + t_out * (p0 - apex_)};
}

double TriangleFanTiling::tile_area(int band, int slice) const {
  const auto c = tile_corners(band, slice);
  double twice = 0.0;
  for (int i = 0; i < 4; ++i) twice += cross(c[i], c[(i + 1) % 4]);
  return 0.5 * std::abs(twice);
}

std::vector<int> exposed_per_sector(const SectorAnnulusTiling& tiling, const ConvexPolygon& hull) {
  std::vector<int> out(tiling.sectors(), 0);
  // With the origin in the hull, ring i + 1 of a sector lies in the hull of
  // the origin and ring i, so containment is monotone inward.
  const bool monotone = hull.size() >= 3 && point_in_convex_polygon({0.0, 0.0}, hull);
  for (int j = 0; j < tiling.sectors(); ++j) {
    for (int i = 1; i <= tiling.rings(); ++i) {
      if (!tiling.tile_inside(i, j, hull)) {
        ++out[j];
      } else if (monotone) {
        break;
      }
    }
  }
  return out;
}

std::size_t exposed_tiles_convex(const SectorAnnulusTiling& tiling, const ConvexPolygon& hull) {
  const auto per = exposed_per_sector(tiling, hull);
  return std::accumulate(per.begin(), per.end(), std::size_t{0});
}

std::size_t exposed_tiles_convex(const GridTiling& tiling, const ConvexPolygon& hull) {
  if (tiling.dimension() != 2) throw std::invalid_argument("planar grid required");
  const int g = tiling.cells_per_side();
  const std::size_t total = static_cast<std::size_t>(g) * g;
  if (hull.size() < 3) return total;
  std::vector<char> in((g + 1) * static_cast<std::size_t>(g + 1));
  for (int ix = 0; ix <= g; ++ix)
    for (int iy = 0; iy <= g; ++iy)
      in[ix * (g + 1) + iy] = point_in_convex_polygon({tiling.line(ix), tiling.line(iy)}, hull);
  std::size_t inside = 0;
  for (int ix = 0; ix < g; ++ix)
    for (int iy = 0; iy < g; ++iy)
      inside += in[ix * (g + 1) + iy] && in[(ix + 1) * (g + 1) + iy] &&
                in[ix * (g + 1) + iy + 1] && in[(ix + 1) * (g + 1) + iy + 1];
  return total - inside;
}

std::size_t exposed_tiles_convex(const TriangleFanTiling& tiling, const ConvexPolygon& hull) {
  if (hull.size() < 3) return tiling.tile_count();
  std::size_t exposed = 0;
  for (int s = 0; s < tiling.slices(); ++s)
    for (int b = 1; b <= tiling.bands(); ++b)
      exposed += !corners_inside(tiling.tile_corners(b, s), hull);
  return exposed;
}

std::vector<int> first_occupied_all(const SectorAnnulusTiling& tiling, std::span<const Point2> S) {
  std::vector<int> first(tiling.sectors(), tiling.rings() + 1);
  for (const Point2 p : S) {
    int& f = first[tiling.sector_of(p)];
    f = std::min(f, tiling.ring_of(p));
  }
  return first;
}

int first_occupied(const SectorAnnulusTiling& tiling, std::span<const Point2> S, int sector) {
  if (sector < 0 || sector >= tiling.sectors()) throw std::out_of_range("sector index");
  int best = tiling.rings() + 1;
  for (const Point2 p : S)
    if (tiling.sector_of(p) == sector) best = std::min(best, tiling.ring_of(p));
  return best;
}

namespace {

// d = 2: per sign vector and column, the cells whose s-corner sees an empty
// quadrant form a run at the top (s_y = +1) or bottom (s_y = -1) of the
// column. The union of the runs is counted per column.
std::uint64_t exposed_cells_plane(const GridTiling& grid, std::span<const PointD> S) {
  const int g = grid.cells_per_side();
  std::vector<int> top(g, 0), bottom(g, 0);
  for (unsigned mask = 0; mask < 4; ++mask) {
    const double sx = mask & 1u ? -1.0 : 1.0;
    const double sy = mask & 2u ? -1.0 : 1.0;
    // Flipped points sorted by x', suffix max of y' (ties in x' excluded by
    // the strict comparison below).
    std::vector<std::pair<double, double>> pts;
    pts.reserve(S.size());
    for (const auto& p : S) pts.emplace_back(sx * p[0], sy * p[1]);
    std::sort(pts.begin(), pts.end());
    std::vector<double> suffix(pts.size() + 1, -std::numeric_limits<double>::infinity());
    for (std::size_t k = pts.size(); k-- > 0;) suffix[k] = std::max(suffix[k + 1], pts[k].second);

    for (int ix = 0; ix < g; ++ix) {
      const double cx = sx > 0 ? grid.line(ix + 1) : -grid.line(ix);
      const auto it = std::upper_bound(pts.begin(), pts.end(), cx,
                                       [](double v, const auto& q) { return v < q.first; });
      const double best = suffix[it - pts.begin()];
      // Cell iy is exposed for this s iff its flipped corner y' >= best.
      auto corner_y = [&](int iy) { return sy > 0 ? grid.line(iy + 1) : -grid.line(iy); };
      auto first_true = [g](auto pred) {
        int lo = 0, hi = g;
        while (lo < hi) {
          const int mid = lo + (hi - lo) / 2;
          if (pred(mid)) hi = mid; else lo = mid + 1;
        }
        return lo;
      };
      if (sy > 0)
        top[ix] = std::max(top[ix], g - first_true([&](int iy) { return corner_y(iy) >= best; }));
      else
        bottom[ix] = std::max(bottom[ix], first_true([&](int iy) { return corner_y(iy) < best; }));
    }
  }
  std::uint64_t total = 0;
  for (int ix = 0; ix < g; ++ix) total += std::min(g, top[ix] + bottom[ix]);
  return total;
}

std::uint64_t exposed_cells_general(const GridTiling& grid, std::span<const PointD> S) {
  const int d = grid.dimension();
  const int g = grid.cells_per_side();
  const unsigned orthants = 1u << d;
  std::vector<std::vector<PointD>> stairs(orthants);
  for (unsigned mask = 0; mask < orthants; ++mask) {
    const auto flipped = flip(S, sign_vector(mask, d));
    for (std::size_t i : strict_maxima(flipped)) stairs[mask].push_back(flipped[i]);
  }
  std::vector<int> cell(d, 0);
  std::vector<double> corner(d);
  std::uint64_t exposed = 0;
  while (true) {
    bool hit = false;
    for (unsigned mask = 0; mask < orthants && !hit; ++mask) {
      for (int k = 0; k < d; ++k)
        corner[k] = (mask >> k) & 1u ? -grid.line(cell[k]) : grid.line(cell[k] + 1);
      const bool occupied = std::any_of(stairs[mask].begin(), stairs[mask].end(), [&](const PointD& q) {
        for (int k = 0; k < d; ++k)
          if (!(q[k] > corner[k])) return false;
        return true;
      });
      hit = !occupied;
    }
    exposed += hit;
    int k = 0;
    while (k < d && ++cell[k] == g) cell[k++] = 0;
    if (k == d) break;
  }
  return exposed;
}

}  // namespace

std::uint64_t exposed_hypercube_cells(const GridTiling& grid, std::span<const PointD> S) {
  if (grid.dimension() > kMaxOrthantDimension) throw std::invalid_argument("orthant count overflow");
  if (S.empty()) return static_cast<std::uint64_t>(grid.cell_count());
  if (common_dimension(S) != grid.dimension()) throw std::invalid_argument("dimension mismatch");
  if (grid.cell_count() > 1e9) throw std::invalid_argument("grid too large");
  if (grid.dimension() == 2) return exposed_cells_plane(grid, S);
  return exposed_cells_general(grid, S);
}

}  // namespace chull
