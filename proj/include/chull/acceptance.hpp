#pragma once

// Named acceptance experiments at desk-scale parameters. Each suite returns
// one line per checked criterion with the measured values.

#include <cstdint>
#include <string>
#include <vector>

namespace chull::acceptance {

struct CriterionResult {
  std::string id;      // e.g. "C5a"
  std::string title;
  bool pass = false;
  std::string detail;  // measured vs expected
};

struct SuiteOptions {
  int threads = 1;
  std::uint64_t seed = 20021;
};

// oracles, disk_exponent, square_log, kgon, dch_alpha, corollary_prob,
// quadrant_polylog, efron, big_disk, first_occupied, exposed_tiles,
// determinism.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Throws std::invalid_argument for an unknown suite.
std::vector<CriterionResult> run_suite(const std::string& name, const SuiteOptions& options);

std::string format_result(const CriterionResult& r);

}  // namespace chull::acceptance
