// chull_lab: run experiments, fit growth laws, verify acceptance suites.
//
//   chull_lab run --stat hull_vertices --region disk --n 1024,4096 --trials 8 --out r/
//   chull_lab fit r/records.csv --model power --svg r/fit.svg
//   chull_lab verify disk_exponent
//   chull_lab sample --region disk --n 5

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chull/acceptance.hpp"
#include "chull/experiments.hpp"
#include "chull/results_io.hpp"
#include "chull/sampling.hpp"
#include "chull/svg_plot.hpp"

namespace fs = std::filesystem;
using namespace chull;

namespace {

constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitVerifyFailed = 3;

int default_threads() {
  if (const char* env = std::getenv("CHULL_LAB_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring CHULL_LAB_THREADS='" << env << "'\n";
  }
  return 1;
}

std::vector<std::int64_t> parse_grid(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ConfigError("n", "cannot parse '" + tok + "'");
    }
    if (used != tok.size()) throw ConfigError("n", "cannot parse '" + tok + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

struct RunFlags {
  std::string config_path;
  std::string stat, region, directions, n;
  int d = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string out = ".";
};

int cmd_run(const RunFlags& f, const CLI::App& sub) {
  ExperimentConfig c;
  c.parallelism = default_threads();
  try {
    if (!f.config_path.empty()) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(read_file(f.config_path));
      } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config", e.what());
      }
      c = config_from_json(j, c);
    }
    if (sub.count("--stat")) {
      try {
        c.statistic = parse_statistic(f.stat);
      } catch (const std::invalid_argument& e) {
        throw ConfigError("stat", e.what());
      }
    }
    if (sub.count("--region")) c.region = f.region;
    if (sub.count("--directions")) c.directions = f.directions;
    if (sub.count("--d")) c.dimension = f.d;
    if (sub.count("--n")) c.n_grid = parse_grid(f.n);
    if (sub.count("--trials")) c.trials = f.trials;
    if (sub.count("--seed")) c.master_seed = f.seed;
    if (sub.count("--threads")) c.parallelism = f.threads;
    validate(c);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }

  const auto t0 = std::chrono::steady_clock::now();
  const auto records = run(c);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto rows = aggregate(records);

  nlohmann::json manifest;
  manifest["artifact_version"] = kArtifactVersion;
  manifest["config"] = config_to_json(c);
  manifest["wall_time_seconds"] = wall;
  manifest["records"] = records.size();
  manifest["files"] = {"records.csv", "aggregates.csv"};

  try {
    const fs::path out(f.out);
    fs::create_directories(out);
    write_file_atomic(out / "records.csv", records_csv(c, records));
    write_file_atomic(out / "aggregates.csv", aggregates_csv(rows));
    write_file_atomic(out / "manifest.json", manifest.dump(2) + "\n");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  std::cerr << records.size() << " records in " << wall << " s -> " << f.out << "\n";
  return 0;
}

int cmd_fit(const std::string& path, const std::string& model_name, const std::string& out,
            const std::string& svg) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  FitResult result;
  std::vector<AggregateRow> rows;
  RecordsFile file;
  try {
    const FitModel model = parse_fit_model(model_name);
    file = parse_records_csv(text);
    rows = aggregate(file.records);
    result = fit(rows, model);
  } catch (const std::exception& e) {
    std::cerr << "fit error: " << e.what() << "\n";
    return kExitConfig;
  }
  const std::string json = fit_to_json(result, rows).dump(2) + "\n";
  try {
    if (out.empty()) {
      std::cout << json;
    } else {
      write_file_atomic(out, json);
    }
    if (!svg.empty()) {
      const std::string title = file.statistic + " (" + file.region + "), " + to_string(result.model) + " fit";
      write_file_atomic(svg, render_fit_svg(rows, result, title));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return 0;
}

int cmd_verify(const std::string& suite, int threads, std::uint64_t seed) {
  if (!acceptance::is_suite(suite)) {
    std::cerr << "unknown suite '" << suite << "'; known:";
    for (const auto& s : acceptance::suite_names()) std::cerr << " " << s;
    std::cerr << "\n";
    return kExitConfig;
  }
  acceptance::SuiteOptions opts;
  opts.threads = threads;
  opts.seed = seed;
  bool ok = true;
  for (const auto& r : acceptance::run_suite(suite, opts)) {
    std::cout << acceptance::format_result(r) << "\n";
    ok = ok && r.pass;
  }
  return ok ? 0 : kExitVerifyFailed;
}

int cmd_sample(const std::string& region_name, int d, std::int64_t n, std::uint64_t seed,
               std::uint64_t stream) {
  Region region = Region::disk();
  try {
    region = make_region(region_name, d > 0 ? std::optional<int>(d) : std::nullopt);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  if (n < 0) {
    std::cerr << "config error: n: must be >= 0\n";
    return kExitConfig;
  }
  RngStream rng = substream(seed, stream);
  for (std::int64_t i = 0; i < n; ++i) {
    const auto p = sample(region, rng);
    for (std::size_t k = 0; k < p.size(); ++k) std::cout << (k ? "," : "") << format_value(p[k]);
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo lab for convex, directed and orthant hulls of random points"};
  app.require_subcommand(1);

  RunFlags rf;
  auto* run_cmd = app.add_subcommand("run", "run an experiment and write records, aggregates and manifest");
  run_cmd->add_option("--config", rf.config_path, "JSON config; flags override its fields");
  run_cmd->add_option("--stat", rf.stat, "statistic name");
  run_cmd->add_option("--region", rf.region, "disk | square | triangle | kgon:<k> | cube");
  run_cmd->add_option("--directions", rf.directions, "dxy | dxy45 | equal:<k> | angles:a,b,...");
  run_cmd->add_option("--d", rf.d, "dimension (cube, nsc_count, maxima_count)");
  run_cmd->add_option("--n", rf.n, "comma-separated n grid");
  run_cmd->add_option("--trials", rf.trials, "trials per n");
  run_cmd->add_option("--seed", rf.seed, "master seed");
  run_cmd->add_option("--threads", rf.threads, "worker threads (default $CHULL_LAB_THREADS or 1)");
  run_cmd->add_option("--out", rf.out, "output directory")->capture_default_str();

  std::string fit_path, fit_model = "power", fit_out, fit_svg;
  auto* fit_cmd = app.add_subcommand("fit", "fit a growth model to a records CSV");
  fit_cmd->add_option("records", fit_path, "records.csv from run")->required();
  fit_cmd->add_option("--model", fit_model, "power | log | polylog")->capture_default_str();
  fit_cmd->add_option("--out", fit_out, "write JSON here instead of stdout");
  fit_cmd->add_option("--svg", fit_svg, "also write a plot");

  std::string suite;
  int verify_threads = default_threads();
  std::uint64_t verify_seed = acceptance::SuiteOptions{}.seed;
  auto* verify_cmd = app.add_subcommand("verify", "run a named acceptance suite");
  verify_cmd->add_option("suite", suite, "suite name")->required();
  verify_cmd->add_option("--threads", verify_threads, "worker threads");
  verify_cmd->add_option("--seed", verify_seed, "master seed")->capture_default_str();

  std::string sample_region = "disk";
  int sample_d = 0;
  std::int64_t sample_n = 10;
  std::uint64_t sample_seed = 0, sample_stream = 0;
  auto* sample_cmd = app.add_subcommand("sample", "dump sampler output as CSV");
  sample_cmd->add_option("--region", sample_region)->capture_default_str();
  sample_cmd->add_option("--d", sample_d);
  sample_cmd->add_option("--n", sample_n)->capture_default_str();
  sample_cmd->add_option("--seed", sample_seed)->capture_default_str();
  sample_cmd->add_option("--stream", sample_stream)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run_cmd) return cmd_run(rf, *run_cmd);
    if (*fit_cmd) return cmd_fit(fit_path, fit_model, fit_out, fit_svg);
    if (*verify_cmd) return cmd_verify(suite, verify_threads, verify_seed);
    if (*sample_cmd) return cmd_sample(sample_region, sample_d, sample_n, sample_seed, sample_stream);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return 0;
}
