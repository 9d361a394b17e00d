#include "chull/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

#include "chull/geom.hpp"
#include "chull/orthant_hull.hpp"
#include "chull/tilings.hpp"

namespace chull {

namespace {

struct StatName {
  Statistic stat;
  const char* name;
};

constexpr StatName kStatNames[] = {
    {Statistic::hull_vertices, "hull_vertices"},
    {Statistic::hull_area_deficit, "hull_area_deficit"},
    {Statistic::dch_boundary_count, "dch_boundary_count"},
    {Statistic::dch_area_deficit, "dch_area_deficit"},
    {Statistic::nsc_count, "nsc_count"},
    {Statistic::maxima_count, "maxima_count"},
    {Statistic::exposed_tiles, "exposed_tiles"},
    {Statistic::first_occupied_mean, "first_occupied_mean"},
    {Statistic::min_contained_radius, "min_contained_radius"},
    {Statistic::corollary_event_prob, "corollary_event_prob"},
};

bool needs_directions(Statistic s) {
  return s == Statistic::dch_boundary_count || s == Statistic::dch_area_deficit ||
         s == Statistic::min_contained_radius;
}

bool needs_dimension(Statistic s) {
  return s == Statistic::nsc_count || s == Statistic::maxima_count;
}

int rounded_root(std::int64_t n, int k) {
  return static_cast<int>(std::llround(std::pow(static_cast<double>(n), 1.0 / k)));
}

bool is_square(std::int64_t n) {
  const auto m = static_cast<std::int64_t>(rounded_root(n, 2));
  return m * m == n;
}

double mean_of(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace

std::string to_string(Statistic s) {
  for (const auto& e : kStatNames)
    if (e.stat == s) return e.name;
  return "unknown";
}

Statistic parse_statistic(const std::string& name) {
  for (const auto& e : kStatNames)
    if (name == e.name) return e.stat;
  throw std::invalid_argument("unknown statistic: " + name);
}

std::string to_string(FitModel m) {
  switch (m) {
    case FitModel::power: return "power";
    case FitModel::log: return "log";
    case FitModel::polylog: return "polylog";
  }
  return "unknown";
}

FitModel parse_fit_model(const std::string& name) {
  if (name == "power") return FitModel::power;
  if (name == "log") return FitModel::log;
  if (name == "polylog") return FitModel::polylog;
  throw std::invalid_argument("unknown fit model: " + name);
}

Region make_region(const std::string& name, std::optional<int> dimension) {
  if (name == "disk") return Region::disk(1.0);
  if (name == "square") return Region::unit_square();
  if (name == "triangle") return Region::triangle({0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0});
  if (name.rfind("kgon:", 0) == 0) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(name.substr(5), &used);
      if (used != name.size() - 5) k = 0;
    } catch (const std::exception&) {
      k = 0;
    }
    if (k < 3) throw ConfigError("region", "kgon needs an integer k >= 3");
    return Region::regular_polygon(k);
  }
  if (name == "cube") {
    if (!dimension) throw ConfigError("d", "region cube needs a dimension");
    if (*dimension < 1) throw ConfigError("d", "dimension must be >= 1");
    return Region::hypercube(*dimension, 1.0);
  }
  throw ConfigError("region", "unknown region '" + name + "'");
}

void validate(const ExperimentConfig& c) {
  if (c.n_grid.empty()) throw ConfigError("n", "n grid is empty");
  for (std::size_t i = 0; i < c.n_grid.size(); ++i) {
    if (c.n_grid[i] < 1) throw ConfigError("n", "grid entries must be >= 1");
    if (i > 0 && c.n_grid[i] <= c.n_grid[i - 1])
      throw ConfigError("n", "grid must be strictly increasing");
  }
  if (c.trials < 1) throw ConfigError("trials", "must be >= 1");
  if (c.parallelism < 1) throw ConfigError("threads", "must be >= 1");

  const Statistic s = c.statistic;
  if (needs_directions(s) && !c.directions)
    throw ConfigError("directions", to_string(s) + " needs a direction set");
  if (c.directions) {
    try {
      parse_direction_spec(*c.directions);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("directions", e.what());
    }
  }
  if (needs_dimension(s) && !c.dimension)
    throw ConfigError("d", to_string(s) + " needs a dimension");
  if (c.dimension && (*c.dimension < 1 || *c.dimension > kMaxOrthantDimension))
    throw ConfigError("d", "dimension must be in [1, 20]");

  const Region region = make_region(c.region, c.dimension);
  const bool planar = region.planar();
  switch (s) {
    case Statistic::hull_vertices:
    case Statistic::hull_area_deficit:
    case Statistic::dch_boundary_count:
    case Statistic::dch_area_deficit:
      if (!planar) throw ConfigError("region", to_string(s) + " needs a planar region");
      break;
    case Statistic::nsc_count:
    case Statistic::maxima_count:
      if (c.region != "cube" && c.region != "square")
        throw ConfigError("region", to_string(s) + " needs region cube or square");
      if (c.region == "square" && *c.dimension != 2)
        throw ConfigError("d", "region square has dimension 2");
      break;
    case Statistic::exposed_tiles:
      if (c.region == "cube") {
        for (auto n : c.n_grid)
          if (std::pow(static_cast<double>(n), *c.dimension) > 1e9)
            throw ConfigError("n", "cube grid with n^d cells exceeds 1e9 cells");
      } else if (c.region != "disk" && c.region != "square" && c.region != "triangle") {
        throw ConfigError("region", "exposed_tiles supports disk, square, triangle, cube");
      }
      break;
    case Statistic::first_occupied_mean:
      if (c.region != "disk") throw ConfigError("region", "first_occupied_mean needs region disk");
      for (auto n : c.n_grid)
        if (n < 27) throw ConfigError("n", "first_occupied_mean needs n >= 27");
      break;
    case Statistic::min_contained_radius:
      if (c.region != "disk") throw ConfigError("region", "min_contained_radius needs region disk");
      if (!(c.radius_tol > 0.0)) throw ConfigError("radius_tol", "must be positive");
      if (c.probe_count < 1) throw ConfigError("probe_count", "must be >= 1");
      break;
    case Statistic::corollary_event_prob:
      if (c.region != "square") throw ConfigError("region", "corollary_event_prob needs region square");
      for (auto n : c.n_grid)
        if (!is_square(n) || n < 64)
          throw ConfigError("n", "corollary_event_prob needs n = m^2 with m >= 8");
      break;
  }
  if (s == Statistic::dch_area_deficit && c.area_samples < 1)
    throw ConfigError("area_samples", "must be >= 1");
  if (s == Statistic::exposed_tiles && c.region == "disk")
    for (auto n : c.n_grid)
      if (rounded_root(n, 3) < 3) throw ConfigError("n", "exposed_tiles on disk needs n >= 27");
}

std::uint64_t trial_stream_index(std::int64_t n, int trial) {
  return mix64(static_cast<std::uint64_t>(n) * 0x9E3779B97F4A7C15ULL ^
               mix64(static_cast<std::uint64_t>(trial) + 0x632BE59BD9B4E019ULL));
}

double evaluate(const ExperimentConfig& c, const Region& region,
                const std::optional<DirectionSet>& directions, std::int64_t n,
                RngStream& rng) {
  const auto count = static_cast<std::size_t>(n);
  switch (c.statistic) {
    case Statistic::hull_vertices: {
      const auto S = sample_points2(region, rng, count);
      return static_cast<double>(convex_hull(S).size());
    }
    case Statistic::hull_area_deficit: {
      const auto S = sample_points2(region, rng, count);
      return 1.0 - polygon_area(convex_hull(S)) / region.measure();
    }
    case Statistic::dch_boundary_count: {
      const auto S = sample_points2(region, rng, count);
      return static_cast<double>(boundary_count(S, *directions));
    }
    case Statistic::dch_area_deficit: {
      const auto S = sample_points2(region, rng, count);
      return 1.0 - area_estimate(S, *directions, rng, c.area_samples, region) / region.measure();
    }
    case Statistic::nsc_count: {
      const auto S = sample_pointsd(region, rng, count);
      return static_cast<double>(orthant_exposed(S).n_sc);
    }
    case Statistic::maxima_count: {
      const auto S = sample_pointsd(region, rng, count);
      return static_cast<double>(maxima(S).size());
    }
    case Statistic::exposed_tiles: {
      if (c.region == "cube") {
        const auto S = sample_pointsd(region, rng, count);
        return static_cast<double>(
            exposed_hypercube_cells(GridTiling(static_cast<int>(n), region.dimension()), S));
      }
      const auto S = sample_points2(region, rng, count);
      const auto hull = convex_hull(S);
      if (c.region == "disk") {
        const int m = rounded_root(n, 3);
        return static_cast<double>(exposed_tiles_convex(SectorAnnulusTiling(m, m * m), hull));
      }
      if (c.region == "square")
        return static_cast<double>(exposed_tiles_convex(GridTiling(std::max(1, rounded_root(n, 2))), hull));
      const auto& t = std::get<Triangle>(region.shape());
      const int m = std::max(1, rounded_root(n, 3));
      return static_cast<double>(exposed_tiles_convex(TriangleFanTiling(t.a, t.b, t.c, 0, m, m * m), hull));
    }
    case Statistic::first_occupied_mean: {
      const auto S = sample_points2(region, rng, count);
      const int m = rounded_root(n, 3);
      const auto first = first_occupied_all(SectorAnnulusTiling(m, m * m), S);
      double sum = 0.0;
      for (int x : first) sum += x;
      return sum / static_cast<double>(first.size());
    }
    case Statistic::min_contained_radius: {
      const auto S = sample_points2(region, rng, count);
      return min_contained_radius(S, *directions, c.radius_tol, c.probe_count);
    }
    case Statistic::corollary_event_prob: {
      const int m = rounded_root(n, 2);
      std::vector<char> top(m, 0);
      for (std::int64_t i = 0; i < n; ++i) {
        const Point2 p = sample_point2(region, rng);
        const int row = std::min(m - 1, static_cast<int>(p.y * m));
        if (row != m - 1) continue;
        top[std::min(m - 1, static_cast<int>(p.x * m))] = 1;
      }
      int events = 0;
      for (int j = 1; j + 1 < m; ++j) events += top[j] && !top[j - 1] && !top[j + 1];
      return static_cast<double>(events) / (m - 2);
    }
  }
  throw std::logic_error("unhandled statistic");
}

std::vector<Record> run(const ExperimentConfig& config) {
  validate(config);
  const Region region = make_region(config.region, config.dimension);
  std::optional<DirectionSet> directions;
  if (config.directions) directions = parse_direction_spec(*config.directions);

  std::vector<Record> records;
  records.reserve(config.n_grid.size() * config.trials);
  for (auto n : config.n_grid)
    for (int t = 0; t < config.trials; ++t) records.push_back({n, t, 0.0});

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) {
      try {
        auto& r = records[i];
        RngStream rng = substream(config.master_seed, trial_stream_index(r.n, r.trial));
        r.value = evaluate(config, region, directions, r.n, rng);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int threads = std::min<int>(config.parallelism, static_cast<int>(records.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

std::vector<AggregateRow> aggregate(std::span<const Record> records) {
  if (records.empty()) throw std::invalid_argument("no records to aggregate");
  std::map<std::int64_t, std::vector<double>> by_n;
  for (const auto& r : records) by_n[r.n].push_back(r.value);
  std::vector<AggregateRow> rows;
  for (const auto& [n, values] : by_n) {
    AggregateRow row;
    row.n = n;
    row.trials = static_cast<int>(values.size());
    row.mean = mean_of(values);
    double ss = 0.0;
    for (double v : values) ss += (v - row.mean) * (v - row.mean);
    row.stddev = values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1)) : 0.0;
    row.stderr_ = row.stddev / std::sqrt(static_cast<double>(values.size()));
    row.min = *std::min_element(values.begin(), values.end());
    row.max = *std::max_element(values.begin(), values.end());
    rows.push_back(row);
  }
  return rows;
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("x and y differ in length");
  if (x.size() < 3) throw std::invalid_argument("fit needs at least 3 points");
  const double k = static_cast<double>(x.size());
  const double mx = mean_of(x), my = mean_of(y);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("fit needs distinct x values");
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (f.intercept + f.slope * x[i]);
    ssr += e * e;
  }
  f.stderr_slope = std::sqrt(ssr / (k - 2.0) / sxx);
  f.r_squared = syy > 0.0 ? std::clamp(1.0 - ssr / syy, 0.0, 1.0) : 1.0;
  return f;
}

FitResult fit(std::span<const AggregateRow> rows, FitModel model) {
  if (rows.size() < 3) throw std::invalid_argument("fit needs at least 3 rows");
  std::vector<double> x, y;
  for (const auto& r : rows) {
    if (r.n < 2 && model == FitModel::polylog)
      throw std::invalid_argument("polylog fit needs n >= 2");
    if (model != FitModel::log && !(r.mean > 0.0))
      throw std::invalid_argument("nonpositive mean under a log transform");
    const double ln_n = std::log(static_cast<double>(r.n));
    switch (model) {
      case FitModel::power:
        x.push_back(ln_n);
        y.push_back(std::log(r.mean));
        break;
      case FitModel::log:
        x.push_back(ln_n);
        y.push_back(r.mean);
        break;
      case FitModel::polylog:
        x.push_back(std::log(ln_n));
        y.push_back(std::log(r.mean));
        break;
    }
  }
  const LinearFit lf = linear_fit(x, y);
  FitResult out;
  out.model = model;
  out.a = model == FitModel::log ? lf.intercept : std::exp(lf.intercept);
  out.b = lf.slope;
  out.stderr_b = lf.stderr_slope;
  out.r_squared = lf.r_squared;
  return out;
}

EfronResult efron_check(const Region& region, std::int64_t n, int trials,
                        std::uint64_t seed, int parallelism) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("efron_check needs even n >= 4");
  if (!region.planar()) throw std::invalid_argument("efron_check needs a planar region");
  ExperimentConfig c;
  c.trials = trials;
  c.master_seed = seed;
  c.parallelism = parallelism;

  auto stats = [&](Statistic s, std::int64_t size) {
    c.statistic = s;
    std::vector<Record> recs(trials);
    std::atomic<int> next{0};
    auto work = [&] {
      for (int t = next++; t < trials; t = next++) {
        RngStream rng = substream(seed, trial_stream_index(size, t));
        recs[t] = {size, t, evaluate(c, region, std::nullopt, size, rng)};
      }
    };
    if (parallelism <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (int k = 0; k < parallelism; ++k) pool.emplace_back(work);
    }
    return aggregate(recs).front();
  };

  const AggregateRow vertices = stats(Statistic::hull_vertices, n);
  const AggregateRow deficit = stats(Statistic::hull_area_deficit, n / 2);
  EfronResult r;
  r.lhs = vertices.mean;
  r.rhs = static_cast<double>(n) * deficit.mean;
  r.sigma = std::hypot(vertices.stderr_, static_cast<double>(n) * deficit.stderr_);
  r.pass = r.lhs <= r.rhs + 3.0 * r.sigma;
  return r;
}

EventEstimate corollary_event_probability(int m, int trials, std::uint64_t seed,
                                          int parallelism) {
  if (m < 8) throw std::invalid_argument("corollary_event_probability needs m >= 8");
  ExperimentConfig c;
  c.statistic = Statistic::corollary_event_prob;
  c.region = "square";
  c.n_grid = {static_cast<std::int64_t>(m) * m};
  c.trials = trials;
  c.master_seed = seed;
  c.parallelism = parallelism;
  const auto rows = aggregate(run(c));
  return {rows.front().mean, rows.front().stderr_};
}

double corollary_event_exact(int m) {
  const double n = static_cast<double>(m) * m;
  return std::pow(1.0 - 2.0 / n, n) - std::pow(1.0 - 3.0 / n, n);
}

}  // namespace chull
