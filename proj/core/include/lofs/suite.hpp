#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lofs/error.hpp"

namespace lofs {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Number of individual instances checked.
  std::size_t cases = 0;
  std::string detail;
  /// JSON for the first violating instance; empty on success.
  std::string witness;
  double seconds = 0.0;
};

struct SuiteOptions {
  Limits limits;
  /// Stop after the first failing criterion.
  bool fail_fast = true;
  std::uint64_t seed = 0x5eed1e55;
  /// Random maps of size <= 4 for the coalgebra check.
  std::size_t sampled_maps = 500;
  /// Random generator-family pairs for the coproduct check.
  std::size_t sampled_families = 100;
  /// Criteria to run (by id); empty runs all.
  std::vector<int> only;
};

struct SuiteReport {
  std::vector<CriterionResult> results;
  bool passed() const;
};

struct Criterion {
  int id;
  std::string title;
  std::function<CriterionResult(const SuiteOptions&)> run;
};

/// The property battery, in id order. Every criterion enumerates its
/// instances from small to large and stops at the first violation, so the
/// recorded witness is a smallest one in that order.
const std::vector<Criterion>& acceptance_criteria();

/// Runs the selected criteria; `on_result` sees each result as it completes.
/// Exceptions inside a criterion count as a failure of that criterion.
SuiteReport run_suite(const SuiteOptions& options,
                      const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace lofs
