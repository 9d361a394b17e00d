#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chull/experiments.hpp"

namespace chull {

inline constexpr const char* kArtifactVersion = "1.0.0";
inline constexpr const char* kRecordsHeader = "statistic,region,directions,d,n,trial,value,seed";
inline constexpr const char* kAggregatesHeader = "n,trials,mean,stddev,stderr,min,max";

// %.17g, so the text round-trips to the same double.
std::string format_value(double v);

std::string records_csv(const ExperimentConfig& config, std::span<const Record> records);
std::string aggregates_csv(std::span<const AggregateRow> rows);

struct RecordsFile {
  std::string statistic;
  std::string region;
  std::string directions;
  std::string d;
  std::string seed;
  std::vector<Record> records;
};

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws FormatError on a bad header, a short row or an unparsable number.
RecordsFile parse_records_csv(const std::string& text);

// Writes to a sibling temp file, then renames over the target. Throws
// std::runtime_error on I/O failure.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);
// Throws std::runtime_error when the file cannot be opened.
std::string read_file(const std::filesystem::path& path);

nlohmann::json config_to_json(const ExperimentConfig& config);
// Fields absent from the JSON keep the values already in `base`. Throws
// ConfigError naming the field on a type mismatch or unknown value.
ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base = {});

nlohmann::json fit_to_json(const FitResult& fit, std::span<const AggregateRow> rows);

}  // namespace chull
