#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <regex>

#include "chull/results_io.hpp"
#include "chull/svg_plot.hpp"

using namespace chull;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t k = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++k;
  return k;
}

}  // namespace

TEST(FormatValue, RoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 123456789.125, -2.5})
    EXPECT_EQ(std::stod(format_value(v)), v);
}

TEST(RecordsCsv, RoundTripWithQuotedDirections) {
  ExperimentConfig c;
  c.statistic = Statistic::dch_boundary_count;
  c.region = "disk";
  c.directions = "angles:0.1,0.7";
  c.master_seed = 12;
  const std::vector<Record> r{{16, 0, 5}, {16, 1, 1.0 / 3.0}, {32, 0, 7}};
  const auto text = records_csv(c, r);
  EXPECT_EQ(text.substr(0, text.find('\n')), kRecordsHeader);
  EXPECT_NE(text.find("\"angles:0.1,0.7\""), std::string::npos);
  const auto f = parse_records_csv(text);
  EXPECT_EQ(f.statistic, "dch_boundary_count");
  EXPECT_EQ(f.directions, "angles:0.1,0.7");
  EXPECT_EQ(f.seed, "12");
  EXPECT_EQ(f.records, r);
}

TEST(RecordsCsv, ParseErrors) {
  EXPECT_THROW(parse_records_csv(""), FormatError);
  EXPECT_THROW(parse_records_csv("a,b\n"), FormatError);
  EXPECT_THROW(parse_records_csv(std::string(kRecordsHeader) + "\n"), FormatError);
  EXPECT_THROW(parse_records_csv(std::string(kRecordsHeader) + "\nx,disk,,,1,0\n"), FormatError);
  EXPECT_THROW(parse_records_csv(std::string(kRecordsHeader) + "\nx,disk,,,1,0,abc,1\n"), FormatError);
}

TEST(AggregatesCsv, Header) {
  const std::vector<AggregateRow> rows{{8, 2, 1.5, 0.5, 0.25, 1, 2}};
  const auto text = aggregates_csv(rows);
  EXPECT_EQ(text, std::string(kAggregatesHeader) + "\n8,2,1.5,0.5,0.25,1,2\n");
}

TEST(Files, AtomicWriteAndRead) {
  const auto dir = std::filesystem::temp_directory_path() / "chull_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "x.txt";
  write_file_atomic(path, "hello\n");
  EXPECT_EQ(read_file(path), "hello\n");
  EXPECT_FALSE(std::filesystem::exists(dir / "x.txt.tmp"));
  EXPECT_THROW(read_file(dir / "missing.txt"), std::runtime_error);
  EXPECT_THROW(write_file_atomic(dir / "no" / "such" / "dir.txt", "x"), std::runtime_error);
  std::filesystem::remove_all(dir);
}

TEST(ConfigJson, RoundTripAndErrors) {
  ExperimentConfig c;
  c.statistic = Statistic::nsc_count;
  c.region = "cube";
  c.dimension = 3;
  c.n_grid = {64, 128};
  c.trials = 4;
  c.master_seed = 99;
  const auto back = config_from_json(config_to_json(c));
  EXPECT_EQ(back.statistic, c.statistic);
  EXPECT_EQ(back.region, c.region);
  EXPECT_EQ(back.dimension, c.dimension);
  EXPECT_EQ(back.n_grid, c.n_grid);
  EXPECT_EQ(back.master_seed, c.master_seed);
  EXPECT_FALSE(back.directions.has_value());

  try {
    config_from_json(nlohmann::json{{"trials", "many"}});
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "trials");
  }
  try {
    config_from_json(nlohmann::json{{"stat", "nope"}});
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "stat");
  }
}

TEST(FitJson, Fields) {
  FitResult f{FitModel::power, 1.0, 0.33, 0.01, 0.99};
  const std::vector<AggregateRow> rows{{8, 1, 2, 0, 0, 2, 2}, {64, 1, 4, 0, 0, 4, 4}};
  const auto j = fit_to_json(f, rows);
  for (const char* k : {"model", "a", "b", "stderr_b", "r_squared", "n_values"}) EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j["n_values"].size(), 2u);
}

TEST(Svg, OnePathOneMarkerPerN) {
  std::vector<AggregateRow> rows;
  for (int e = 10; e <= 14; ++e) rows.push_back({std::int64_t{1} << e, 10, std::cbrt(double(1 << e)), 0, 0, 0, 0});
  const auto f = fit(rows, FitModel::power);
  const auto svg = render_fit_svg(rows, f, "disk <test>");
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_EQ(count(svg, "<path"), 1u);
  EXPECT_EQ(count(svg, "<circle"), rows.size());
  EXPECT_NE(svg.find("disk &lt;test&gt;"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  const auto g = fit(rows, FitModel::log);
  EXPECT_EQ(count(render_fit_svg(rows, g, "log"), "<circle"), rows.size());
}
