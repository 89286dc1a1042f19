// Integration suite: runs the full verification battery and prints one
// pass/fail line per criterion. Exit status is the number of failures.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "gbss/report.hpp"

int main(int argc, char** argv) {
  uint64_t seed = 0;
  int threads = 2;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    if (flag == "--seed") seed = std::strtoull(argv[i + 1], nullptr, 10);
    if (flag == "--threads") threads = std::atoi(argv[i + 1]);
  }

  std::vector<gbss::report::CriterionResult> results = gbss::report::run_all(seed, threads);
  int failures = 0;
  for (const auto& r : results) {
    std::printf("[%s] %2d %-100s %8.1f ms  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.elapsed_ms, r.detail.c_str());
    if (!r.pass) ++failures;
  }
  std::printf("%zu criteria, %d failed\n", results.size(), failures);
  return failures;
}
