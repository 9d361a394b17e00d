#include "chull/results_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace chull {

namespace {

template <class T>
T parse_number(const std::string& s, const char* what) {
  T v{};
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc{} || res.ptr != end)
    throw FormatError(std::string("bad ") + what + " '" + s + "'");
  return v;
}

// Directions like "angles:0.1,0.2" contain commas; quote the field.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

std::vector<std::string> parse_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur.push_back('"');
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (quoted) throw FormatError("unterminated quote");
  out.push_back(cur);
  return out;
}

}  // namespace

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string records_csv(const ExperimentConfig& config, std::span<const Record> records) {
  const std::string prefix = to_string(config.statistic) + "," + csv_field(config.region) + "," +
                             csv_field(config.directions.value_or("")) + "," +
                             (config.dimension ? std::to_string(*config.dimension) : "") + ",";
  const std::string seed = std::to_string(config.master_seed);
  std::string out = kRecordsHeader;
  out += '\n';
  for (const auto& r : records) {
    out += prefix;
    out += std::to_string(r.n) + "," + std::to_string(r.trial) + "," + format_value(r.value) +
           "," + seed + "\n";
  }
  return out;
}

std::string aggregates_csv(std::span<const AggregateRow> rows) {
  std::string out = kAggregatesHeader;
  out += '\n';
  for (const auto& r : rows)
    out += std::to_string(r.n) + "," + std::to_string(r.trials) + "," + format_value(r.mean) +
           "," + format_value(r.stddev) + "," + format_value(r.stderr_) + "," +
           format_value(r.min) + "," + format_value(r.max) + "\n";
  return out;
}

RecordsFile parse_records_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty records file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kRecordsHeader) throw FormatError("unexpected header '" + line + "'");
  RecordsFile file;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = parse_csv_line(line);
    if (f.size() != 8)
      throw FormatError("line " + std::to_string(lineno) + ": expected 8 fields");
    if (file.records.empty()) {
      file.statistic = f[0];
      file.region = f[1];
      file.directions = f[2];
      file.d = f[3];
      file.seed = f[7];
    }
    Record r;
    r.n = parse_number<std::int64_t>(f[4], "n");
    r.trial = parse_number<int>(f[5], "trial");
    r.value = parse_number<double>(f[6], "value");
    file.records.push_back(r);
  }
  if (file.records.empty()) throw FormatError("records file has no rows");
  return file;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot rename into " + path.string());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json config_to_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["stat"] = to_string(c.statistic);
  j["region"] = c.region;
  j["directions"] = c.directions ? nlohmann::json(*c.directions) : nlohmann::json(nullptr);
  j["d"] = c.dimension ? nlohmann::json(*c.dimension) : nlohmann::json(nullptr);
  j["n"] = c.n_grid;
  j["trials"] = c.trials;
  j["seed"] = c.master_seed;
  j["threads"] = c.parallelism;
  j["area_samples"] = c.area_samples;
  j["radius_tol"] = c.radius_tol;
  j["probe_count"] = c.probe_count;
  return j;
}

ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig c) {
  if (!j.is_object()) throw ConfigError("config", "expected a JSON object");
  auto field = [&](const char* name, auto& target) {
    if (!j.contains(name) || j.at(name).is_null()) return;
    try {
      j.at(name).get_to(target);
    } catch (const nlohmann::json::exception&) {
      throw ConfigError(name, "wrong type");
    }
  };
  if (j.contains("stat")) {
    std::string s;
    field("stat", s);
    try {
      c.statistic = parse_statistic(s);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("stat", e.what());
    }
  }
  field("region", c.region);
  if (j.contains("directions") && !j.at("directions").is_null()) {
    std::string d;
    field("directions", d);
    c.directions = d;
  }
  if (j.contains("d") && !j.at("d").is_null()) {
    int d = 0;
    field("d", d);
    c.dimension = d;
  }
  field("n", c.n_grid);
  field("trials", c.trials);
  field("seed", c.master_seed);
  field("threads", c.parallelism);
  field("area_samples", c.area_samples);
  field("radius_tol", c.radius_tol);
  field("probe_count", c.probe_count);
  return c;
}

nlohmann::json fit_to_json(const FitResult& fit, std::span<const AggregateRow> rows) {
  nlohmann::json j;
  j["model"] = to_string(fit.model);
  j["a"] = fit.a;
  j["b"] = fit.b;
  j["stderr_b"] = fit.stderr_b;
  j["r_squared"] = fit.r_squared;
  std::vector<std::int64_t> ns;
  for (const auto& r : rows) ns.push_back(r.n);
  j["n_values"] = ns;
  return j;
}

}  // namespace chull
