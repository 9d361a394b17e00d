// Runs acceptance suites and prints one PASS/FAIL line per criterion.
//   acceptance            all suites
//   acceptance kgon efron selected suites
// Exit 0 when every printed criterion passed, 1 otherwise, 2 on a bad name.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "chull/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace chull::acceptance;
  std::vector<std::string> suites(argv + 1, argv + argc);
  if (suites.empty()) suites = suite_names();
  for (const auto& s : suites) {
    if (!is_suite(s)) {
      std::fprintf(stderr, "unknown suite '%s'\n", s.c_str());
      return 2;
    }
  }

  SuiteOptions opts;
  if (const char* env = std::getenv("CHULL_LAB_THREADS")) opts.threads = std::max(1, std::atoi(env));

  int failed = 0, total = 0;
  for (const auto& s : suites) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto results = run_suite(s, opts);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& r : results) {
      std::printf("%s\n", format_result(r).c_str());
      ++total;
      if (!r.pass) ++failed;
    }
    std::printf("-- suite %s: %.1f s\n", s.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", total - failed, total);
  return failed == 0 ? 0 : 1;
}
