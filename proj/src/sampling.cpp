#include "chull/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chull {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed),
      stream_index_(stream_index),
      key_(mix64(mix64(master_seed + kGolden) ^ (stream_index * 0xD1B54A32D192ED03ULL + 1))) {}

std::uint64_t RngStream::next_u64() {
  ++counter_;
  return mix64(key_ + counter_ * kGolden);
}

double RngStream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

RngStream substream(std::uint64_t master_seed, std::uint64_t index) {
  return RngStream(master_seed, index);
}

Region Region::disk(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw std::invalid_argument("disk radius must be positive");
  return Region(Disk{radius});
}

Region Region::triangle(Point2 a, Point2 b, Point2 c) {
  if (orient(a, b, c) == 0) throw std::invalid_argument("collinear triangle");
  return Region(Triangle{a, b, c});
}

Region Region::polygon(ConvexPolygon poly) {
  if (poly.size() < 3 || !(polygon_area(poly) > 0.0))
    throw std::invalid_argument("polygon region needs positive area");
  std::vector<double> cdf;
  cdf.reserve(poly.size() - 2);
  double total = 0.0;
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
    total += 0.5 * cross(poly[i] - poly[0], poly[i + 1] - poly[0]);
    cdf.push_back(total);
  }
  for (auto& c : cdf) c /= total;
  cdf.back() = 1.0;
  Region r(Polygon{std::move(poly)});
  r.fan_cdf_ = std::move(cdf);
  return r;
}

Region Region::hypercube(int d, double side) {
  if (d < 1) throw std::invalid_argument("hypercube dimension must be >= 1");
  if (!(side > 0.0) || !std::isfinite(side))
    throw std::invalid_argument("hypercube side must be positive");
  return Region(Hypercube{d, side});
}

Region Region::regular_polygon(int k, double radius) {
  if (k < 3) throw std::invalid_argument("regular polygon needs k >= 3");
  std::vector<Point2> v;
  v.reserve(k);
  for (int i = 0; i < k; ++i) {
    const double t = 2.0 * std::numbers::pi * i / k;
    v.push_back({radius * std::cos(t), radius * std::sin(t)});
  }
  return polygon(ConvexPolygon(std::move(v)));
}

int Region::dimension() const {
  if (const auto* h = std::get_if<Hypercube>(&shape_)) return h->d;
  return 2;
}

double Region::measure() const {
  return std::visit(
      Overloaded{
          [](const Disk& s) { return std::numbers::pi * s.radius * s.radius; },
          [](const Triangle& s) { return 0.5 * std::abs(cross(s.b - s.a, s.c - s.a)); },
          [](const Polygon& s) { return polygon_area(s.poly); },
          [](const Hypercube& s) { return std::pow(s.side, s.d); },
      },
      shape_);
}

bool Region::contains(Point2 p) const {
  return std::visit(
      Overloaded{
          [&](const Disk& s) { return p.x * p.x + p.y * p.y <= s.radius * s.radius; },
          [&](const Triangle& s) {
            const int o = orient(s.a, s.b, s.c);
            return orient(s.a, s.b, p) * o >= 0 && orient(s.b, s.c, p) * o >= 0 &&
                   orient(s.c, s.a, p) * o >= 0;
          },
          [&](const Polygon& s) { return point_in_convex_polygon(p, s.poly); },
          [&](const Hypercube& s) {
            return s.d == 2 && p.x >= 0.0 && p.x <= s.side && p.y >= 0.0 &&
                   p.y <= s.side;
          },
      },
      shape_);
}

bool Region::contains(const PointD& p) const {
  if (static_cast<int>(p.size()) != dimension()) return false;
  if (const auto* h = std::get_if<Hypercube>(&shape_))
    return std::all_of(p.begin(), p.end(),
                       [&](double c) { return c >= 0.0 && c <= h->side; });
  return contains(Point2{p[0], p[1]});
}

Point2 sample_triangle(Point2 a, Point2 b, Point2 c, RngStream& rng) {
  const double su = std::sqrt(rng.next_double());
  const double v = rng.next_double();
  return a + su * (b - a) + (su * v) * (c - b);
}

Point2 sample_point2(const Region& region, RngStream& rng) {
  return std::visit(
      Overloaded{
          [&](const Disk& s) {
            const double r = s.radius * std::sqrt(rng.next_double());
            const double t = 2.0 * std::numbers::pi * rng.next_double();
            return Point2{r * std::cos(t), r * std::sin(t)};
          },
          [&](const Triangle& s) { return sample_triangle(s.a, s.b, s.c, rng); },
          [&](const Polygon& s) {
            const double u = rng.next_double();
            const auto& cdf = region.fan_cdf_;
            const std::size_t i =
                std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
            const std::size_t t = std::min(i, cdf.size() - 1);
            return sample_triangle(s.poly[0], s.poly[t + 1], s.poly[t + 2], rng);
          },
          [&](const Hypercube& s) {
            if (s.d != 2) throw std::invalid_argument("hypercube region is not planar");
            const double x = s.side * rng.next_double();
            const double y = s.side * rng.next_double();
            return Point2{x, y};
          },
      },
      region.shape());
}

PointD sample(const Region& region, RngStream& rng) {
  if (const auto* h = std::get_if<Hypercube>(&region.shape())) {
    PointD p(h->d);
    for (auto& c : p) c = h->side * rng.next_double();
    return p;
  }
  const Point2 q = sample_point2(region, rng);
  return {q.x, q.y};
}

std::vector<Point2> sample_points2(const Region& region, RngStream& rng,
                                   std::size_t n) {
  std::vector<Point2> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(sample_point2(region, rng));
  return out;
}

std::vector<PointD> sample_pointsd(const Region& region, RngStream& rng,
                                   std::size_t n) {
  std::vector<PointD> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(sample(region, rng));
  return out;
}

}  // namespace chull
