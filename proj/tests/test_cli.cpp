#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sys/wait.h>

#include "chull/results_io.hpp"

namespace fs = std::filesystem;
using namespace chull;

namespace {

int cli(const std::string& args) {
  const std::string cmd = std::string(CHULL_LAB_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("chull_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, RunWritesThreeFilesAndRerunIsIdentical) {
  const std::string args = "run --stat hull_vertices --region disk --n 1024,4096 --trials 8 --seed 7 --out ";
  ASSERT_EQ(cli(args + path("a")), 0);
  ASSERT_EQ(cli(args + path("b") + " --threads 3"), 0);
  const auto recs = read_file(path("a/records.csv"));
  EXPECT_EQ(parse_records_csv(recs).records.size(), 16u);
  EXPECT_EQ(recs, read_file(path("b/records.csv")));
  EXPECT_EQ(read_file(path("a/aggregates.csv")), read_file(path("b/aggregates.csv")));
  const auto manifest = nlohmann::json::parse(read_file(path("a/manifest.json")));
  EXPECT_EQ(manifest["artifact_version"], kArtifactVersion);
  EXPECT_EQ(manifest["config"]["seed"], 7);
  EXPECT_TRUE(manifest.contains("wall_time_seconds"));
}

TEST_F(Cli, ConfigFileWithFlagOverride) {
  write_file_atomic(path("cfg.json"),
                    R"({"stat": "hull_vertices", "region": "square", "n": [64, 128], "trials": 3, "seed": 5})");
  ASSERT_EQ(cli("run --config " + path("cfg.json") + " --trials 2 --out " + path("o")), 0);
  const auto f = parse_records_csv(read_file(path("o/records.csv")));
  EXPECT_EQ(f.region, "square");
  EXPECT_EQ(f.records.size(), 4u);
}

TEST_F(Cli, ConfigErrorsExitTwo) {
  EXPECT_EQ(cli("run --stat dch_boundary_count --region disk --n 64 --out " + path("x")), 2);
  EXPECT_EQ(cli("run --stat hull_vertices --region disk --n 64,abc --out " + path("x")), 2);
  EXPECT_EQ(cli("run --stat bogus --n 64 --out " + path("x")), 2);
  write_file_atomic(path("bad.json"), "{not json");
  EXPECT_EQ(cli("run --config " + path("bad.json") + " --out " + path("x")), 2);
  EXPECT_EQ(cli("frobnicate"), 2);
}

TEST_F(Cli, FitExactPowerLaw) {
  std::string csv = std::string(kRecordsHeader) + "\n";
  for (int n : {10, 100, 1000, 10000})
    csv += "hull_vertices,disk,,," + std::to_string(n) + ",0," + format_value(std::cbrt(double(n))) + ",1\n";
  write_file_atomic(path("r.csv"), csv);
  ASSERT_EQ(cli("fit " + path("r.csv") + " --model power --out " + path("fit.json") + " --svg " + path("fit.svg")), 0);
  const auto j = nlohmann::json::parse(read_file(path("fit.json")));
  EXPECT_NEAR(j["b"].get<double>(), 1.0 / 3.0, 1e-9);
  EXPECT_EQ(j["model"], "power");
  EXPECT_NE(read_file(path("fit.svg")).find("<path"), std::string::npos);
}

TEST_F(Cli, FitErrors) {
  EXPECT_EQ(cli("fit " + path("missing.csv")), 1);
  std::string csv = std::string(kRecordsHeader) + "\nhull_vertices,disk,,,10,0,1,1\nhull_vertices,disk,,,20,0,2,1\n";
  write_file_atomic(path("short.csv"), csv);
  EXPECT_EQ(cli("fit " + path("short.csv")), 2);
  csv += "hull_vertices,disk,,,30,0,0,1\n";
  write_file_atomic(path("zero.csv"), csv);
  EXPECT_EQ(cli("fit " + path("zero.csv") + " --model power"), 2);
  EXPECT_EQ(cli("fit " + path("zero.csv") + " --model log"), 0);
  EXPECT_EQ(cli("fit " + path("zero.csv") + " --model cubic"), 2);
}

TEST_F(Cli, VerifyUnknownSuite) { EXPECT_EQ(cli("verify no_such_suite"), 2); }

TEST_F(Cli, SampleDump) {
  const std::string cmd = std::string(CHULL_LAB_CLI) + " sample --region cube --d 3 --n 5 --seed 1 > " + path("s.csv");
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  const auto text = read_file(path("s.csv"));
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
  EXPECT_EQ(std::count(text.begin(), text.end(), ','), 10);
  EXPECT_EQ(cli("sample --region blob"), 2);
}
