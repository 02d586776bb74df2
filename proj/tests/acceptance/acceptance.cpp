// Runs the full property battery and prints one line per criterion.
#include <cstdio>
#include <iostream>

#include "lofs/suite.hpp"

int main() {
  lofs::SuiteOptions options;
  options.fail_fast = false;
  const auto report = lofs::run_suite(options, [](const lofs::CriterionResult& r) {
    std::printf("%s  criterion %2d  %-48s %8.2fs  %zu cases\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.seconds, r.cases);
    std::printf("      %s\n", r.detail.c_str());
    if (!r.witness.empty()) std::printf("      witness: %s\n", r.witness.c_str());
    std::fflush(stdout);
  });
  std::size_t passed = 0;
  for (const auto& r : report.results) passed += r.passed;
  std::printf("%zu/%zu criteria passed\n", passed, report.results.size());
  return report.passed() ? 0 : 1;
}
