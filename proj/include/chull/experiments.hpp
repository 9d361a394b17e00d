#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "chull/directed_hull.hpp"
#include "chull/sampling.hpp"

namespace chull {

enum class Statistic {
  hull_vertices,
  hull_area_deficit,
  dch_boundary_count,
  dch_area_deficit,
  nsc_count,
  maxima_count,
  exposed_tiles,
  first_occupied_mean,
  min_contained_radius,
  corollary_event_prob,
};

std::string to_string(Statistic s);
// Throws std::invalid_argument for unknown names.
Statistic parse_statistic(const std::string& name);

// Raised for invalid experiment configurations; names the offending field.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct ExperimentConfig {
  Statistic statistic = Statistic::hull_vertices;
  // "disk", "square", "triangle", "kgon:<k>", "cube" (needs dimension).
  std::string region = "disk";
  std::optional<std::string> directions;
  std::optional<int> dimension;
  std::vector<std::int64_t> n_grid;
  int trials = 1;
  std::uint64_t master_seed = 0;
  int parallelism = 1;

  // Statistic knobs.
  std::size_t area_samples = 4096;    // dch_area_deficit
  double radius_tol = 1e-5;           // min_contained_radius
  std::size_t probe_count = 2048;     // min_contained_radius
};

// Throws ConfigError.
void validate(const ExperimentConfig& config);

// Builds the named region; throws ConfigError("region", ...).
Region make_region(const std::string& name, std::optional<int> dimension);

struct Record {
  std::int64_t n = 0;
  int trial = 0;
  double value = 0.0;

  friend bool operator==(const Record&, const Record&) = default;
};

// Substream index of trial t at size n; independent of the rest of the grid.
std::uint64_t trial_stream_index(std::int64_t n, int trial);

// One value of the configured statistic on a fresh sample of n points drawn
// from rng.
double evaluate(const ExperimentConfig& config, const Region& region,
                const std::optional<DirectionSet>& directions, std::int64_t n,
                RngStream& rng);

// All (n, trial) values sorted by n then trial. Trials run on
// config.parallelism threads; the output does not depend on it.
std::vector<Record> run(const ExperimentConfig& config);

struct AggregateRow {
  std::int64_t n = 0;
  int trials = 0;
  double mean = 0.0;
  double stddev = 0.0;  // sample, divisor trials - 1
  double stderr_ = 0.0;
  double min = 0.0;
  double max = 0.0;
};

std::vector<AggregateRow> aggregate(std::span<const Record> records);

enum class FitModel { power, log, polylog };

std::string to_string(FitModel m);
FitModel parse_fit_model(const std::string& name);

struct FitResult {
  FitModel model = FitModel::power;
  double a = 0.0;
  double b = 0.0;
  double stderr_b = 0.0;
  double r_squared = 0.0;
};

struct LinearFit {
  double intercept = 0.0;
  double slope = 0.0;
  double stderr_slope = 0.0;
  double r_squared = 0.0;
};

// Unweighted least squares y = intercept + slope * x; needs >= 3 points.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

// power: ln mean = ln a + b ln n; log: mean = a + b ln n;
// polylog: ln mean = ln a + b ln ln n.
FitResult fit(std::span<const AggregateRow> rows, FitModel model);

struct EfronResult {
  double lhs = 0.0;     // mean hull vertex count at n
  double rhs = 0.0;     // n * mean area-deficit fraction at n / 2
  double sigma = 0.0;   // combined standard error of rhs - lhs
  bool pass = false;    // lhs <= rhs + 3 sigma
};

EfronResult efron_check(const Region& region, std::int64_t n, int trials,
                        std::uint64_t seed, int parallelism = 1);

struct EventEstimate {
  double probability = 0.0;
  double stderr_ = 0.0;
};

// Fraction of top-row cells j = 2..m-1 of the m x m grid on the unit square
// that are occupied while both neighbours are empty, n = m^2 points,
// averaged over trials.
EventEstimate corollary_event_probability(int m, int trials, std::uint64_t seed,
                                          int parallelism = 1);

// (1 - 2/n)^n - (1 - 3/n)^n.
double corollary_event_exact(int m);

}  // namespace chull
