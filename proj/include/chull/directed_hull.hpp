#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "chull/geom.hpp"
#include "chull/sampling.hpp"

namespace chull {

// A finite set of unit vectors closed under negation, sorted by angle in
// [0, 2pi). Consecutive vectors (cyclically) form the D-pairs; the density
// alpha is the largest counter-clockwise gap between them.
class DirectionSet {
 public:
  std::span<const Point2> vectors() const { return vectors_; }
  std::span<const double> angles() const { return angles_; }
  std::size_t size() const { return vectors_.size(); }

  // Pair i is (vectors()[i], vectors()[(i + 1) % size()]).
  std::size_t pair_count() const { return vectors_.size(); }
  // Counter-clockwise angle from the first to the second vector of pair i.
  double gap(std::size_t pair) const;
  double alpha() const { return alpha_; }

  // Textual form used by the CLI, e.g. "dxy", "equal:16". Empty when the
  // set was built from raw angles.
  const std::string& name() const { return name_; }

 private:
  friend DirectionSet make_direction_set(std::span<const double>, bool);
  friend DirectionSet parse_direction_spec(const std::string&);

  std::vector<double> angles_;
  std::vector<Point2> vectors_;
  double alpha_ = 0.0;
  std::string name_;
};

// Errors: "not closed under negation" (auto_close == false),
// "duplicate directions" (two input angles within 1e-12).
DirectionSet make_direction_set(std::span<const double> angles, bool auto_close);

// "dxy", "dxy45", "equal:k" (k doubled directions, alpha = pi/k),
// "angles:a1,a2,..." (radians, auto-closed).
DirectionSet parse_direction_spec(const std::string& spec);

struct Wedge {
  Point2 u1, u2;  // counter-clockwise generators of the open wedge
};

struct Halfplane {
  Point2 normal;  // unit; the open set {y : <y, normal> > 0}
};

class ConeFamily {
 public:
  using Kind = std::variant<Wedge, Halfplane>;

  // Throws unless orient(0, u1, u2) > 0.
  static ConeFamily wedge(Point2 u1, Point2 u2);
  // Normalizes; throws on a zero normal.
  static ConeFamily halfplane(Point2 normal);

  const Kind& kind() const { return kind_; }
  bool is_wedge() const { return std::holds_alternative<Wedge>(kind_); }
  const Wedge& as_wedge() const { return std::get<Wedge>(kind_); }
  const Halfplane& as_halfplane() const { return std::get<Halfplane>(kind_); }

  // Opening angle in (0, pi] (pi for halfplanes).
  double opening() const;

  // Membership of an offset y - anchor in the open / closed cone.
  bool open_contains(Point2 offset) const;
  bool closed_contains(Point2 offset) const;

  bool approx_equal(const ConeFamily& other, double tol = 1e-9) const;

 private:
  explicit ConeFamily(Kind k) : kind_(k) {}
  Kind kind_;
};

// Wedges (v1,v2)_L = pspan(-v1, v2) and (v1,v2)_R = pspan(v1, -v2) for every
// pair with gap < pi, then halfplanes with normals +-rot90(v) for every v.
// Pairs whose gap is pi contribute the halfplanes bounded by their line.
// Duplicates are dropped, keeping the first occurrence.
std::vector<ConeFamily> quadrant_family(const DirectionSet& D);

// Linear map sending pspan(u1, u2) onto the open positive quadrant.
class WedgeFrame {
 public:
  // Throws "ill-conditioned wedge" when |det[u1 u2]| < 1e-9.
  explicit WedgeFrame(const Wedge& w);
  Point2 apply(Point2 p) const {
    return {inv_[0] * p.x + inv_[1] * p.y, inv_[2] * p.x + inv_[3] * p.y};
  }

 private:
  double inv_[4];
};

// Indices of points whose open cone p + pspan(u1, u2) holds no other point,
// sorted by first transformed coordinate descending.
std::vector<std::size_t> staircase(std::span<const Point2> S, const Wedge& wedge);

struct ExposureReport {
  std::vector<std::size_t> exposed;  // ascending
  std::vector<ConeFamily> witness;   // witness[i] exposes exposed[i]
};

enum class Prefilter { automatic, always, never };

ExposureReport exposed_points(std::span<const Point2> S, const DirectionSet& D,
                              Prefilter prefilter = Prefilter::automatic);

std::size_t boundary_count(std::span<const Point2> S, const DirectionSet& D);

// Membership structure: one staircase per wedge family, sorted by the first
// transformed coordinate with suffix maxima of the second, plus the support
// value of every halfplane family. Immutable once built.
class DirectedHull {
 public:
  DirectedHull(std::span<const Point2> S, const DirectionSet& D);

  // Closed-cone test: every family anchored at x meets S.
  bool contains(Point2 x) const;

  std::span<const ConeFamily> families() const { return families_; }

 private:
  struct WedgeIndex {
    WedgeFrame frame;
    std::vector<double> a;        // ascending
    std::vector<double> b_suffix; // max b over [i, end)
  };
  struct HalfplaneIndex {
    Point2 normal;
    double support;
  };

  std::vector<ConeFamily> families_;
  std::vector<WedgeIndex> wedges_;
  std::vector<HalfplaneIndex> halfplanes_;
};

bool contains(std::span<const Point2> S, const DirectionSet& D, Point2 x);

// measure(region) times the fraction of `samples` uniform region draws that
// fall inside the directed hull.
double area_estimate(std::span<const Point2> S, const DirectionSet& D,
                     RngStream& rng, std::size_t samples, const Region& region);

// Largest r (bisection to tol) such that probe_count equally spaced points on
// the circle of radius r all lie in the directed hull; 0 when radius tol
// already fails.
double min_contained_radius(std::span<const Point2> S, const DirectionSet& D,
                            double tol, std::size_t probe_count);

}  // namespace chull
