#include "chull/directed_hull.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chull {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDuplicateTol = 1e-12;
constexpr double kClosureTol = 1e-9;

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t -= kTwoPi;
  return t;
}

// Circular distance between two angles in [0, 2pi).
double angle_distance(double a, double b) {
  const double d = std::abs(a - b);
  return std::min(d, kTwoPi - d);
}

Point2 unit_vector(double t) {
  double c = std::cos(t), s = std::sin(t);
  if (std::abs(c) < 1e-15) { c = 0.0; s = s > 0 ? 1.0 : -1.0; }
  if (std::abs(s) < 1e-15) { s = 0.0; c = c > 0 ? 1.0 : -1.0; }
  return {c, s};
}

Point2 rot90(Point2 v) { return {-v.y, v.x}; }
Point2 neg(Point2 v) { return {-v.x, -v.y}; }

// Positions of the strict maxima (no other point strictly greater in both
// coordinates) among (a[i], b[i]), ordered by a descending.
std::vector<std::size_t> strict_maxima_2d(std::span<const double> a,
                                          std::span<const double> b) {
  std::vector<std::size_t> order(a.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (a[i] != a[j]) return a[i] > a[j];
    if (b[i] != b[j]) return b[i] > b[j];
    return i < j;
  });
  std::vector<std::size_t> out;
  double best_b = -std::numeric_limits<double>::infinity();  // over larger a
  for (std::size_t g = 0; g < order.size();) {
    std::size_t h = g;
    double group_max = best_b;
    while (h < order.size() && a[order[h]] == a[order[g]]) {
      const std::size_t i = order[h];
      if (!(best_b > b[i])) out.push_back(i);
      group_max = std::max(group_max, b[i]);
      ++h;
    }
    best_b = group_max;
    g = h;
  }
  return out;
}

// Staircase of the points S[idx[k]] for the given frame; returns indices
// into S.
std::vector<std::size_t> staircase_subset(std::span<const Point2> S,
                                          std::span<const std::size_t> idx,
                                          const WedgeFrame& frame) {
  std::vector<double> a(idx.size()), b(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const Point2 t = frame.apply(S[idx[k]]);
    a[k] = t.x;
    b[k] = t.y;
  }
  auto pos = strict_maxima_2d(a, b);
  for (auto& p : pos) p = idx[p];
  return pos;
}

// Staircases of sixteen right-angle wedges rotated by pi/8 steps. Every
// point exposed by a wedge (or halfplane) that contains one of these
// quadrants is exposed by that quadrant too, and every cone-order dominator
// can be replaced by a maximal one, so a family's staircase over the
// quadrant's staircase equals its staircase over S.
class QuadrantFilter {
 public:
  static constexpr int kCount = 16;
  static constexpr double kMargin = 1e-7;

  explicit QuadrantFilter(std::span<const Point2> S) : S_(S) {
    all_.resize(S.size());
    std::iota(all_.begin(), all_.end(), 0);
  }

  // Candidate indices for a wedge, or nullopt if no quadrant fits inside.
  std::optional<std::span<const std::size_t>> for_wedge(const Wedge& w) {
    const double start = std::atan2(w.u1.y, w.u1.x);
    const double opening = std::atan2(cross(w.u1, w.u2), dot(w.u1, w.u2));
    for (int k = 0; k < kCount; ++k) {
      const double delta = wrap_angle(angle(k) - start);
      if (delta >= kMargin && delta + kPi / 2 <= opening - kMargin) return get(k);
    }
    return std::nullopt;
  }

  std::span<const std::size_t> for_halfplane(const Halfplane& h) {
    const double start = std::atan2(h.normal.y, h.normal.x) - kPi / 2;
    int best = 0;
    double best_slack = -1.0;
    for (int k = 0; k < kCount; ++k) {
      const double delta = wrap_angle(angle(k) - start);
      const double slack = std::min(delta, kPi / 2 - delta);
      if (delta <= kPi / 2 && slack > best_slack) {
        best_slack = slack;
        best = k;
      }
    }
    return get(best);
  }

 private:
  static double angle(int k) { return k * kPi / 8; }

  std::span<const std::size_t> get(int k) {
    auto& slot = cache_[k];
    if (!slot) {
      const Point2 u1 = unit_vector(angle(k));
      const WedgeFrame frame(Wedge{u1, rot90(u1)});
      auto st = staircase_subset(S_, all_, frame);
      std::sort(st.begin(), st.end());
      slot = std::move(st);
    }
    return *slot;
  }

  std::span<const Point2> S_;
  std::vector<std::size_t> all_;
  std::array<std::optional<std::vector<std::size_t>>, kCount> cache_;
};

bool use_prefilter(Prefilter mode, std::size_t n, std::size_t families) {
  switch (mode) {
    case Prefilter::always: return true;
    case Prefilter::never: return false;
    case Prefilter::automatic: return n > 1024 && families > 16;
  }
  return false;
}

// Indices attaining the maximum of <p, normal> over idx.
std::vector<std::size_t> halfplane_extremes(std::span<const Point2> S,
                                            std::span<const std::size_t> idx,
                                            Point2 normal) {
  double best = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> out;
  for (std::size_t i : idx) {
    const double v = dot(S[i], normal);
    if (v > best) {
      best = v;
      out.assign(1, i);
    } else if (v == best) {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace

double DirectionSet::gap(std::size_t pair) const {
  const std::size_t n = angles_.size();
  if (n == 1) return kTwoPi;
  if (pair + 1 < n) return angles_[pair + 1] - angles_[pair];
  return angles_[0] + kTwoPi - angles_[n - 1];
}

DirectionSet make_direction_set(std::span<const double> angles, bool auto_close) {
  if (angles.empty()) throw std::invalid_argument("empty direction list");
  std::vector<double> a;
  a.reserve(angles.size() * 2);
  for (double t : angles) {
    if (!std::isfinite(t)) throw std::invalid_argument("non-finite direction angle");
    a.push_back(wrap_angle(t));
  }
  std::sort(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double next = i + 1 < a.size() ? a[i + 1] : a[0] + kTwoPi;
    if (a.size() > 1 && next - a[i] < kDuplicateTol)
      throw std::invalid_argument("duplicate directions");
  }

  auto has_angle = [](const std::vector<double>& v, double t) {
    return std::any_of(v.begin(), v.end(),
                       [&](double s) { return angle_distance(s, t) < kClosureTol; });
  };

  if (auto_close) {
    const std::vector<double> given = a;
    for (double t : given) {
      const double anti = wrap_angle(t + kPi);
      if (!has_angle(a, anti)) a.push_back(anti);
    }
    std::sort(a.begin(), a.end());
  } else {
    for (double t : a)
      if (!has_angle(a, wrap_angle(t + kPi)))
        throw std::invalid_argument("not closed under negation");
  }

  DirectionSet D;
  D.angles_ = a;
  D.vectors_.resize(a.size());
  // Vectors in [pi, 2pi) are exact negations of their antipodes.
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < kPi) D.vectors_[i] = unit_vector(a[i]);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < kPi) continue;
    std::size_t partner = a.size();
    double best = kClosureTol;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] >= kPi) continue;
      const double d = angle_distance(a[j], a[i] - kPi);
      if (d < best) { best = d; partner = j; }
    }
    D.vectors_[i] = partner < a.size() ? neg(D.vectors_[partner]) : unit_vector(a[i]);
  }
  for (std::size_t p = 0; p < D.pair_count(); ++p) D.alpha_ = std::max(D.alpha_, D.gap(p));
  return D;
}

DirectionSet parse_direction_spec(const std::string& spec) {
  DirectionSet D;
  if (spec == "dxy") {
    const double a[] = {0.0, kPi / 2};
    D = make_direction_set(a, true);
  } else if (spec == "dxy45") {
    const double a[] = {kPi / 4, 3 * kPi / 4};
    D = make_direction_set(a, true);
  } else if (spec.rfind("equal:", 0) == 0) {
    std::size_t used = 0;
    long k = 0;
    try {
      k = std::stol(spec.substr(6), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad direction spec: " + spec);
    }
    if (used != spec.size() - 6 || k < 1 || k > 1 << 20)
      throw std::invalid_argument("bad direction spec: " + spec);
    std::vector<double> a(k);
    for (long i = 0; i < k; ++i) a[i] = kPi * static_cast<double>(i) / static_cast<double>(k);
    D = make_direction_set(a, true);
  } else if (spec.rfind("angles:", 0) == 0) {
    std::vector<double> a;
    std::stringstream in(spec.substr(7));
    std::string item;
    while (std::getline(in, item, ',')) {
      std::size_t used = 0;
      try {
        a.push_back(std::stod(item, &used));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad direction spec: " + spec);
      }
      if (used != item.size()) throw std::invalid_argument("bad direction spec: " + spec);
    }
    D = make_direction_set(a, true);
  } else {
    throw std::invalid_argument("unknown direction spec: " + spec);
  }
  D.name_ = spec;
  return D;
}

ConeFamily ConeFamily::wedge(Point2 u1, Point2 u2) {
  if (orient({0.0, 0.0}, u1, u2) <= 0)
    throw std::invalid_argument("wedge generators must be counter-clockwise and independent");
  return ConeFamily(Wedge{u1, u2});
}

ConeFamily ConeFamily::halfplane(Point2 normal) {
  const double len = std::hypot(normal.x, normal.y);
  if (!(len > 0.0)) throw std::invalid_argument("degenerate halfplane normal");
  return ConeFamily(Halfplane{{normal.x / len, normal.y / len}});
}

double ConeFamily::opening() const {
  if (const auto* w = std::get_if<Wedge>(&kind_))
    return std::atan2(cross(w->u1, w->u2), dot(w->u1, w->u2));
  return kPi;
}

bool ConeFamily::open_contains(Point2 y) const {
  if (const auto* w = std::get_if<Wedge>(&kind_))
    return cross(w->u1, y) > 0.0 && cross(y, w->u2) > 0.0;
  return dot(y, std::get<Halfplane>(kind_).normal) > 0.0;
}

bool ConeFamily::closed_contains(Point2 y) const {
  if (const auto* w = std::get_if<Wedge>(&kind_))
    return cross(w->u1, y) >= 0.0 && cross(y, w->u2) >= 0.0;
  return dot(y, std::get<Halfplane>(kind_).normal) >= 0.0;
}

bool ConeFamily::approx_equal(const ConeFamily& other, double tol) const {
  auto close = [tol](Point2 p, Point2 q) {
    return std::abs(p.x - q.x) <= tol && std::abs(p.y - q.y) <= tol;
  };
  if (is_wedge() != other.is_wedge()) return false;
  if (is_wedge())
    return close(as_wedge().u1, other.as_wedge().u1) &&
           close(as_wedge().u2, other.as_wedge().u2);
  return close(as_halfplane().normal, other.as_halfplane().normal);
}

std::vector<ConeFamily> quadrant_family(const DirectionSet& D) {
  std::vector<ConeFamily> raw;
  const auto v = D.vectors();
  raw.reserve(4 * v.size());
  for (std::size_t p = 0; p < D.pair_count(); ++p) {
    const Point2 v1 = v[p];
    const Point2 v2 = v[(p + 1) % v.size()];
    if (std::abs(D.gap(p) - kPi) < kClosureTol || D.gap(p) > kPi) {
      raw.push_back(ConeFamily::halfplane(rot90(v1)));
      raw.push_back(ConeFamily::halfplane(neg(rot90(v1))));
      continue;
    }
    raw.push_back(ConeFamily::wedge(v2, neg(v1)));  // (v1,v2)_L = pspan(-v1, v2)
    raw.push_back(ConeFamily::wedge(neg(v2), v1));  // (v1,v2)_R = pspan(v1, -v2)
  }
  for (const Point2 d : v) {
    raw.push_back(ConeFamily::halfplane(rot90(d)));
    raw.push_back(ConeFamily::halfplane(neg(rot90(d))));
  }

  // Sort-based dedup keyed by the first generator's angle; keeps the
  // earliest occurrence and the original order.
  auto key = [](const ConeFamily& f) {
    const Point2 g = f.is_wedge() ? f.as_wedge().u1 : f.as_halfplane().normal;
    return wrap_angle(std::atan2(g.y, g.x));
  };
  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> keys(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) keys[i] = key(raw[i]);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (raw[i].is_wedge() != raw[j].is_wedge()) return raw[i].is_wedge();
    if (keys[i] != keys[j]) return keys[i] < keys[j];
    return i < j;
  });
  std::vector<bool> keep(raw.size(), true);
  auto same = [&](std::size_t i, std::size_t j) { return raw[i].approx_equal(raw[j]); };
  for (std::size_t g = 0; g < order.size();) {
    std::size_t h = g + 1;
    while (h < order.size() && same(order[g], order[h])) keep[order[h++]] = false;
    g = h;
  }
  // Groups straddling angle 0 sort to both ends of their kind.
  for (bool wedges : {true, false}) {
    std::vector<std::size_t> kind;
    for (std::size_t i : order)
      if (keep[i] && raw[i].is_wedge() == wedges) kind.push_back(i);
    if (kind.size() >= 2 && same(kind.front(), kind.back()))
      keep[std::max(kind.front(), kind.back())] = false;
  }
  std::vector<ConeFamily> out;
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (keep[i]) out.push_back(raw[i]);
  return out;
}

WedgeFrame::WedgeFrame(const Wedge& w) {
  const double det = w.u1.x * w.u2.y - w.u2.x * w.u1.y;
  if (!(std::abs(det) >= 1e-9)) throw std::invalid_argument("ill-conditioned wedge");
  // inverse of [[u1.x, u2.x], [u1.y, u2.y]]
  inv_[0] = w.u2.y / det;
  inv_[1] = -w.u2.x / det;
  inv_[2] = -w.u1.y / det;
  inv_[3] = w.u1.x / det;
  // Keep exact signed zeros/ones for axis-aligned generators.
  for (double& c : inv_)
    if (c == 0.0) c = 0.0;
}

std::vector<std::size_t> staircase(std::span<const Point2> S, const Wedge& wedge) {
  if (S.empty()) throw std::invalid_argument("empty point set");
  const WedgeFrame frame(wedge);
  std::vector<std::size_t> all(S.size());
  std::iota(all.begin(), all.end(), 0);
  return staircase_subset(S, all, frame);
}

ExposureReport exposed_points(std::span<const Point2> S, const DirectionSet& D,
                              Prefilter prefilter) {
  if (S.empty()) throw std::invalid_argument("empty point set");
  const auto families = quadrant_family(D);
  const bool filtered = use_prefilter(prefilter, S.size(), families.size());
  QuadrantFilter filter(S);
  std::vector<std::size_t> all(S.size());
  std::iota(all.begin(), all.end(), 0);

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> witness_of(S.size(), kNone);
  for (std::size_t f = 0; f < families.size(); ++f) {
    std::vector<std::size_t> hit;
    if (families[f].is_wedge()) {
      const Wedge& w = families[f].as_wedge();
      const WedgeFrame frame(w);
      std::optional<std::span<const std::size_t>> cand;
      if (filtered) cand = filter.for_wedge(w);
      hit = staircase_subset(S, cand ? *cand : std::span<const std::size_t>(all), frame);
    } else {
      const Halfplane& h = families[f].as_halfplane();
      hit = halfplane_extremes(S, filtered ? filter.for_halfplane(h) : all, h.normal);
    }
    for (std::size_t i : hit)
      if (witness_of[i] == kNone) witness_of[i] = f;
  }

  ExposureReport report;
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (witness_of[i] == kNone) continue;
    report.exposed.push_back(i);
    report.witness.push_back(families[witness_of[i]]);
  }
  return report;
}

std::size_t boundary_count(std::span<const Point2> S, const DirectionSet& D) {
  return exposed_points(S, D).exposed.size();
}

DirectedHull::DirectedHull(std::span<const Point2> S, const DirectionSet& D)
    : families_(quadrant_family(D)) {
  if (S.empty()) throw std::invalid_argument("empty point set");
  const bool filtered = use_prefilter(Prefilter::automatic, S.size(), families_.size());
  QuadrantFilter filter(S);
  std::vector<std::size_t> all(S.size());
  std::iota(all.begin(), all.end(), 0);

  for (const auto& f : families_) {
    if (f.is_wedge()) {
      const WedgeFrame frame(f.as_wedge());
      std::optional<std::span<const std::size_t>> cand;
      if (filtered) cand = filter.for_wedge(f.as_wedge());
      auto st = staircase_subset(S, cand ? *cand : std::span<const std::size_t>(all), frame);
      // Staircase comes ordered by a descending; store ascending.
      WedgeIndex idx{frame, {}, {}};
      idx.a.resize(st.size());
      idx.b_suffix.resize(st.size());
      for (std::size_t k = 0; k < st.size(); ++k) {
        const Point2 t = frame.apply(S[st[st.size() - 1 - k]]);
        idx.a[k] = t.x;
        idx.b_suffix[k] = t.y;
      }
      for (std::size_t k = st.size() - 1; k-- > 0;)
        idx.b_suffix[k] = std::max(idx.b_suffix[k], idx.b_suffix[k + 1]);
      wedges_.push_back(std::move(idx));
    } else {
      const Point2 nrm = f.as_halfplane().normal;
      double support = -std::numeric_limits<double>::infinity();
      for (std::size_t i : filtered ? filter.for_halfplane(f.as_halfplane())
                                    : std::span<const std::size_t>(all))
        support = std::max(support, dot(S[i], nrm));
      halfplanes_.push_back({nrm, support});
    }
  }
}

bool DirectedHull::contains(Point2 x) const {
  for (const auto& h : halfplanes_)
    if (dot(x, h.normal) > h.support) return false;
  for (const auto& w : wedges_) {
    const Point2 t = w.frame.apply(x);
    const auto it = std::lower_bound(w.a.begin(), w.a.end(), t.x);
    if (it == w.a.end()) return false;
    if (w.b_suffix[it - w.a.begin()] < t.y) return false;
  }
  return true;
}

bool contains(std::span<const Point2> S, const DirectionSet& D, Point2 x) {
  return DirectedHull(S, D).contains(x);
}

double area_estimate(std::span<const Point2> S, const DirectionSet& D,
                     RngStream& rng, std::size_t samples, const Region& region) {
  if (samples == 0) throw std::invalid_argument("samples must be >= 1");
  const DirectedHull hull(S, D);
  std::size_t inside = 0;
  for (std::size_t i = 0; i < samples; ++i)
    inside += hull.contains(sample_point2(region, rng)) ? 1 : 0;
  return region.measure() * static_cast<double>(inside) / static_cast<double>(samples);
}

double min_contained_radius(std::span<const Point2> S, const DirectionSet& D,
                            double tol, std::size_t probe_count) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (probe_count == 0) throw std::invalid_argument("probe_count must be >= 1");
  const DirectedHull hull(S, D);
  std::vector<Point2> dirs(probe_count);
  for (std::size_t k = 0; k < probe_count; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(probe_count);
    dirs[k] = {std::cos(t), std::sin(t)};
  }
  auto all_inside = [&](double r) {
    return std::all_of(dirs.begin(), dirs.end(),
                       [&](Point2 u) { return hull.contains(r * u); });
  };
  if (!all_inside(tol)) return 0.0;
  if (all_inside(1.0)) return 1.0;
  double lo = tol, hi = 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (all_inside(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace chull
