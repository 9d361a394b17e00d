#include "chull/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "chull/directed_hull.hpp"
#include "chull/experiments.hpp"
#include "chull/oracle.hpp"
#include "chull/orthant_hull.hpp"
#include "chull/results_io.hpp"
#include "chull/tilings.hpp"

namespace chull::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::int64_t> pow2_grid(int lo, int hi) {
  std::vector<std::int64_t> g;
  for (int e = lo; e <= hi; ++e) g.push_back(std::int64_t{1} << e);
  return g;
}

ExperimentConfig base_config(const SuiteOptions& o, Statistic s, std::string region,
                             std::vector<std::int64_t> grid, int trials) {
  ExperimentConfig c;
  c.statistic = s;
  c.region = std::move(region);
  c.n_grid = std::move(grid);
  c.trials = trials;
  c.master_seed = o.seed;
  c.parallelism = std::max(1, o.threads);
  return c;
}

std::vector<AggregateRow> run_rows(const ExperimentConfig& c) {
  const auto records = run(c);
  return aggregate(records);
}

std::string means(const std::vector<AggregateRow>& rows) {
  std::string s;
  for (const auto& r : rows) s += fmt("%s%lld:%.4g", s.empty() ? "" : " ", static_cast<long long>(r.n), r.mean);
  return s;
}

// ---- 1. oracle equivalence ----------------------------------------------

std::vector<CriterionResult> suite_oracles(const SuiteOptions& o) {
  const auto t0 = Clock::now();
  std::vector<std::string> specs = {"dxy", "dxy45"};
  for (int k = 2; k <= 16; ++k) specs.push_back("equal:" + std::to_string(k));
  std::vector<DirectionSet> sets;
  for (const auto& s : specs) sets.push_back(parse_direction_spec(s));
  const Region disk = Region::disk();
  const Region square = Region::unit_square();

  constexpr int kPlanar = 600;
  int exposed_mismatch = 0, prefilter_mismatch = 0, witness_bad = 0;
  int contains_mismatch = 0, probes = 0;
  std::string first_failure;
  for (int i = 0; i < kPlanar; ++i) {
    RngStream rng = substream(o.seed, 1'000'000 + i);
    const std::size_t n = 1 + rng.next_u64() % 128;
    const Region& region = (i % 2 == 0) ? disk : square;
    const DirectionSet& D = sets[i % sets.size()];
    const auto S = sample_points2(region, rng, n);

    const auto naive = oracle::naive_exposed(S, D);
    const auto fast = exposed_points(S, D, Prefilter::never);
    const auto filtered = exposed_points(S, D, Prefilter::always);
    if (fast.exposed != naive) {
      ++exposed_mismatch;
      if (first_failure.empty())
        first_failure = fmt("instance %d (%s, n=%zu)", i, specs[i % sets.size()].c_str(), n);
    }
    if (filtered.exposed != naive) ++prefilter_mismatch;
    for (std::size_t k = 0; k < fast.exposed.size(); ++k)
      if (!oracle::naive_cone_empty(S, fast.exposed[k], fast.witness[k])) ++witness_bad;

    // Two probes per instance, plus the first sample point, which is always
    // inside.
    const DirectedHull hull(S, D);
    for (int p = 0; p < 2; ++p) {
      const Point2 x{2.4 * rng.next_double() - 1.2, 2.4 * rng.next_double() - 1.2};
      ++probes;
      if (hull.contains(x) != oracle::naive_contains(S, D, x)) ++contains_mismatch;
    }
    ++probes;
    if (hull.contains(S[0]) != oracle::naive_contains(S, D, S[0])) ++contains_mismatch;
  }

  constexpr int kSpatial = 240;
  int maxima_mismatch = 0, orthant_mismatch = 0;
  for (int i = 0; i < kSpatial; ++i) {
    RngStream rng = substream(o.seed, 2'000'000 + i);
    const int d = 2 + i % 3;
    const std::size_t n = 1 + rng.next_u64() % 256;
    const Region cube = Region::hypercube(d);
    auto S = sample_pointsd(cube, rng, n);
    // Coarse coordinates on a third of the instances force ties.
    if (i % 3 == 0)
      for (auto& p : S)
        for (auto& c : p) c = std::floor(c * 8.0) / 8.0;
    if (maxima(S) != oracle::naive_maxima(S)) ++maxima_mismatch;
    if (orthant_exposed(S).indices != oracle::naive_orthant_exposed(S)) ++orthant_mismatch;
  }
  const double secs = seconds_since(t0);

  std::vector<CriterionResult> out;
  out.push_back({"C1a", "exposed_points matches naive_exposed",
                 exposed_mismatch == 0 && prefilter_mismatch == 0 && witness_bad == 0,
                 fmt("%d instances: %d mismatches, %d prefilter mismatches, %d bad witnesses%s%s",
                     kPlanar, exposed_mismatch, prefilter_mismatch, witness_bad,
                     first_failure.empty() ? "" : "; first at ", first_failure.c_str())});
  out.push_back({"C1b", "maxima / orthant_exposed match naive oracles",
                 maxima_mismatch == 0 && orthant_mismatch == 0,
                 fmt("%d instances d in {2,3,4}: %d maxima mismatches, %d orthant mismatches",
                     kSpatial, maxima_mismatch, orthant_mismatch)});
  out.push_back({"C1c", "DirectedHull::contains matches naive_contains",
                 contains_mismatch == 0 && probes >= 1000,
                 fmt("%d probes, %d mismatches", probes, contains_mismatch)});
  out.push_back({"C1d", "oracle campaign runtime < 120 s", secs < 120.0, fmt("%.1f s", secs)});
  return out;
}

// ---- 2. disk exponent ----------------------------------------------------

std::vector<CriterionResult> suite_disk_exponent(const SuiteOptions& o) {
  const auto t0 = Clock::now();
  const auto rows = run_rows(base_config(o, Statistic::hull_vertices, "disk", pow2_grid(11, 16), 200));
  const double secs = seconds_since(t0);
  const auto f = fit(rows, FitModel::power);
  const bool ok = f.b >= 0.30 && f.b <= 0.37 && f.r_squared >= 0.99;
  return {
      {"C2", "disk hull vertices ~ n^b, b in [0.30, 0.37], r2 >= 0.99", ok,
       fmt("b = %.4f (95%% CI %.4f..%.4f), r2 = %.5f; means %s", f.b, f.b - 1.96 * f.stderr_b,
           f.b + 1.96 * f.stderr_b, f.r_squared, means(rows).c_str())},
      {"C2t", "disk exponent runtime < 600 s", secs < 600.0, fmt("%.1f s", secs)},
  };
}

// ---- 3. square log law ---------------------------------------------------

std::vector<CriterionResult> suite_square_log(const SuiteOptions& o) {
  const auto rows = run_rows(base_config(o, Statistic::hull_vertices, "square", pow2_grid(11, 16), 200));
  const auto p = fit(rows, FitModel::power);
  const auto l = fit(rows, FitModel::log);
  return {
      {"C3a", "square hull vertices: power exponent <= 0.12", p.b <= 0.12,
       fmt("b = %.4f; means %s", p.b, means(rows).c_str())},
      {"C3b", "square hull vertices: log model r2 >= 0.98, slope > 0",
       l.r_squared >= 0.98 && l.b > 0.0, fmt("mean = %.3f + %.4f ln n, r2 = %.5f", l.a, l.b, l.r_squared)},
  };
}

// ---- 4. k-gon scaling ----------------------------------------------------

std::vector<CriterionResult> suite_kgon(const SuiteOptions& o) {
  std::string detail;
  double lo = 1e300, hi = 0.0;
  for (int k : {3, 6, 12, 24}) {
    const auto rows = run_rows(base_config(o, Statistic::hull_vertices, "kgon:" + std::to_string(k),
                                           {std::int64_t{1} << 14}, 200));
    const double per_k = rows.at(0).mean / k;
    lo = std::min(lo, per_k);
    hi = std::max(hi, per_k);
    detail += fmt("k=%d mean=%.3f mean/k=%.3f; ", k, rows[0].mean, per_k);
  }
  detail += fmt("max/min = %.3f (limit 2)", hi / lo);
  return {{"C4", "k-gon hull vertices / k within a factor-2 band at n = 2^14", hi / lo <= 2.0, detail}};
}

// ---- 5. directed hull exponents -----------------------------------------

std::vector<CriterionResult> suite_dch_alpha(const SuiteOptions& o) {
  auto ca = base_config(o, Statistic::dch_boundary_count, "square", pow2_grid(12, 16), 40);
  ca.directions = "dxy45";
  const auto ra = run_rows(ca);
  const auto fa = fit(ra, FitModel::power);

  auto cb = base_config(o, Statistic::dch_boundary_count, "disk", pow2_grid(12, 16), 20);
  cb.directions = "equal:512";
  const auto rb = run_rows(cb);
  const auto fb = fit(rb, FitModel::power);
  const double alpha = parse_direction_spec("equal:512").alpha();
  return {
      {"C5a", "dxy45 in square: boundary count exponent in [0.45, 0.55]",
       fa.b >= 0.45 && fa.b <= 0.55, fmt("b = %.4f, r2 = %.4f; means %s", fa.b, fa.r_squared, means(ra).c_str())},
      {"C5b", "equal:512 in disk: boundary count exponent in [0.28, 0.40]",
       fb.b >= 0.28 && fb.b <= 0.40,
       fmt("alpha = %.5f, b = %.4f, r2 = %.4f; means %s", alpha, fb.b, fb.r_squared, means(rb).c_str())},
  };
}

// ---- 6. corollary constant -----------------------------------------------

std::vector<CriterionResult> suite_corollary_prob(const SuiteOptions& o) {
  const auto t0 = Clock::now();
  const auto e = corollary_event_probability(500, 20, o.seed, std::max(1, o.threads));
  const double secs = seconds_since(t0);
  const double target = std::exp(-2.0) - std::exp(-3.0);
  return {
      {"C6", "corollary event probability = 0.0855 +- 0.010 (m = 500, 20 trials)",
       std::abs(e.probability - 0.0855) <= 0.010,
       fmt("p = %.5f +- %.5f (limit %.5f, finite-n exact %.5f)", e.probability, e.stderr_, target,
           corollary_event_exact(500))},
      {"C6t", "corollary runtime < 300 s", secs < 300.0, fmt("%.1f s", secs)},
  };
}

// ---- 7. quadrant hull polylog --------------------------------------------

std::vector<CriterionResult> suite_quadrant_polylog(const SuiteOptions& o) {
  auto c2 = base_config(o, Statistic::nsc_count, "cube", pow2_grid(10, 17), 100);
  c2.dimension = 2;
  const auto r2 = run_rows(c2);
  double lo = 1e300, hi = 0.0;
  for (const auto& r : r2) {
    const double v = r.mean / std::log(static_cast<double>(r.n));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const auto p2 = fit(r2, FitModel::power);

  auto c3 = c2;
  c3.dimension = 3;
  const auto r3 = run_rows(c3);
  std::vector<double> x, y;
  for (const auto& r : r3) {
    const double l = std::log(static_cast<double>(r.n));
    x.push_back(l * l);
    y.push_back(r.mean);
  }
  const auto lin = linear_fit(x, y);
  const auto p3 = fit(r3, FitModel::power);

  return {
      {"C7a", "d=2: n_sc / ln n within a factor-2 band", hi / lo <= 2.0,
       fmt("range %.3f..%.3f, ratio %.3f; means %s", lo, hi, hi / lo, means(r2).c_str())},
      {"C7b", "d=2: power exponent <= 0.12", p2.b <= 0.12, fmt("b = %.4f", p2.b)},
      {"C7c", "d=3: n_sc linear in (ln n)^2 with r2 >= 0.95", lin.r_squared >= 0.95,
       fmt("n_sc = %.3f + %.4f (ln n)^2, r2 = %.5f; means %s", lin.intercept, lin.slope, lin.r_squared,
           means(r3).c_str())},
      {"C7d", "d=3: power exponent <= 0.12", p3.b <= 0.12, fmt("b = %.4f, r2 = %.4f", p3.b, p3.r_squared)},
  };
}

// ---- 8. efron ------------------------------------------------------------

std::vector<CriterionResult> suite_efron(const SuiteOptions& o) {
  std::vector<CriterionResult> out;
  const std::pair<const char*, Region> regions[] = {{"disk", Region::disk()},
                                                    {"square", Region::unit_square()}};
  for (const auto& [name, region] : regions) {
    for (std::int64_t n : {std::int64_t{1} << 10, std::int64_t{1} << 12}) {
      const auto e = efron_check(region, n, 500, o.seed, std::max(1, o.threads));
      out.push_back({fmt("C8-%s-%lld", name, static_cast<long long>(n)),
                     fmt("Efron: E[vertices](%lld) <= n f(n/2) + 3 sigma (%s)", static_cast<long long>(n), name),
                     e.pass, fmt("lhs = %.4f, rhs = %.4f, sigma = %.4f", e.lhs, e.rhs, e.sigma)});
    }
  }
  return out;
}

// ---- 9. big disk ---------------------------------------------------------

std::vector<CriterionResult> suite_big_disk(const SuiteOptions& o) {
  auto c = base_config(o, Statistic::min_contained_radius, "disk", pow2_grid(10, 16), 16);
  c.directions = "equal:64";
  const auto rows = run_rows(c);
  std::vector<double> x, y;
  std::string detail;
  for (const auto& r : rows) {
    x.push_back(std::log(static_cast<double>(r.n)));
    y.push_back(std::log(1.0 - r.mean));
    detail += fmt("%lld:%.5f ", static_cast<long long>(r.n), 1.0 - r.mean);
  }
  const auto f = linear_fit(x, y);
  return {{"C9", "ln(1 - r_min) vs ln n slope in [-0.65, -0.35] (equal:64)",
           f.slope >= -0.65 && f.slope <= -0.35,
           fmt("slope = %.4f, r2 = %.4f; 1-r: %s", f.slope, f.r_squared, detail.c_str())}};
}

// ---- 10. first occupied ring ---------------------------------------------

std::vector<CriterionResult> suite_first_occupied(const SuiteOptions& o) {
  std::vector<CriterionResult> out;
  const Region disk = Region::disk();
  constexpr int kTrials = 60;
  constexpr int kMaxK = 10;
  for (int m : {16, 32}) {
    const std::int64_t n = std::int64_t{m} * m * m;
    const SectorAnnulusTiling tiling(m, m * m);
    std::vector<long> at_least(kMaxK + 1, 0);
    double sum = 0.0;
    long samples = 0;
    for (int t = 0; t < kTrials; ++t) {
      RngStream rng = substream(o.seed ^ 0x5eed0010ULL, trial_stream_index(n, t));
      const auto S = sample_points2(disk, rng, static_cast<std::size_t>(n));
      for (int x : first_occupied_all(tiling, S)) {
        sum += x;
        ++samples;
        for (int k = 1; k <= kMaxK; ++k)
          if (x >= k) ++at_least[k];
      }
    }
    const double mean = sum / samples;
    out.push_back({fmt("C10-m%d-mean", m), fmt("mean first occupied ring <= 2.6 (m = %d)", m), mean <= 2.6,
                   fmt("mean X_j = %.4f over %ld sectors", mean, samples)});
    bool ok = true;
    std::string detail;
    for (int k = 1; k <= kMaxK; ++k) {
      const double bound = std::pow(1.0 - (k - 1.0) / static_cast<double>(n), static_cast<double>(n));
      const double p = static_cast<double>(at_least[k]) / samples;
      const double sigma = std::sqrt(bound * (1.0 - bound) / samples);
      const bool pass = p <= bound + 3.0 * sigma;
      ok = ok && pass;
      detail += fmt("k=%d %.4f<=%.4f%s ", k, p, bound + 3.0 * sigma, pass ? "" : "!");
    }
    out.push_back({fmt("C10-m%d-tail", m), fmt("P[X_j >= k] <= (1-(k-1)/n)^n + 3 sigma, k <= 10 (m = %d)", m),
                   ok, detail});
  }
  return out;
}

// ---- 11. exposed tiles ---------------------------------------------------

std::vector<CriterionResult> suite_exposed_tiles(const SuiteOptions& o) {
  std::string detail;
  double lo = 1e300, hi = 0.0;
  for (int m : {8, 16, 32}) {
    const auto rows = run_rows(base_config(o, Statistic::exposed_tiles, "disk",
                                           {std::int64_t{m} * m * m}, 100));
    const double per_m = rows.at(0).mean / m;
    lo = std::min(lo, per_m);
    hi = std::max(hi, per_m);
    detail += fmt("m=%d mean=%.2f /m=%.3f; ", m, rows[0].mean, per_m);
  }
  const double spread = hi / lo - 1.0;
  detail += fmt("spread %.1f%%", 100.0 * spread);
  return {{"C11", "exposed tiles / m varies < 50% over m in {8, 16, 32}", spread < 0.5, detail}};
}

// ---- 12. determinism -----------------------------------------------------

std::vector<CriterionResult> suite_determinism(const SuiteOptions& o) {
  std::vector<ExperimentConfig> configs;
  configs.push_back(base_config(o, Statistic::hull_vertices, "disk", pow2_grid(11, 16), 40));
  auto dch = base_config(o, Statistic::dch_boundary_count, "square", pow2_grid(12, 14), 12);
  dch.directions = "dxy45";
  configs.push_back(dch);
  auto nsc = base_config(o, Statistic::nsc_count, "cube", pow2_grid(10, 13), 12);
  nsc.dimension = 3;
  configs.push_back(nsc);
  configs.push_back(base_config(o, Statistic::exposed_tiles, "disk", {512, 4096}, 12));

  int differing = 0;
  std::string detail;
  for (const auto& base : configs) {
    std::string reference;
    for (int threads : {1, 2, 4}) {
      auto c = base;
      c.parallelism = threads;
      const auto csv = records_csv(c, run(c));
      if (threads == 1) {
        reference = csv;
      } else if (csv != reference) {
        ++differing;
        detail += to_string(c.statistic) + fmt(" differs at %d threads; ", threads);
      }
    }
  }
  detail += fmt("%zu configs x threads {1,2,4}, %d differing CSVs", configs.size(), differing);
  return {{"C12", "record CSVs byte-identical across thread counts", differing == 0, detail}};
}

using SuiteFn = std::function<std::vector<CriterionResult>(const SuiteOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"oracles", suite_oracles},
      {"disk_exponent", suite_disk_exponent},
      {"square_log", suite_square_log},
      {"kgon", suite_kgon},
      {"dch_alpha", suite_dch_alpha},
      {"corollary_prob", suite_corollary_prob},
      {"quadrant_polylog", suite_quadrant_polylog},
      {"efron", suite_efron},
      {"big_disk", suite_big_disk},
      {"first_occupied", suite_first_occupied},
      {"exposed_tiles", suite_exposed_tiles},
      {"determinism", suite_determinism},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<CriterionResult> run_suite(const std::string& name, const SuiteOptions& options) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(options);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::string format_result(const CriterionResult& r) {
  return std::string(r.pass ? "PASS " : "FAIL ") + r.id + "  " + r.title + "  [" + r.detail + "]";
}

}  // namespace chull::acceptance
