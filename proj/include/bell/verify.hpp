#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace bell {

struct VerifyFailure {
  std::string input;     // instance description (graph6, k, ids...)
  std::string expected;
  std::string actual;
};

struct VerifySuiteReport {
  std::string suite;
  int cases = 0;
  std::vector<VerifyFailure> failures;
  long long wall_ms = 0;

  bool ok() const { return failures.empty(); }
};

/// The suite names accepted by run_verify_suite, in canonical order:
/// figures, cliques, forbidden, matching, realize, tree-roundtrip,
/// core-roundtrip, properties.
const std::vector<std::string>& verify_suite_names();

/// Runs one suite. max_n rescales the instance space where the suite is
/// parameterized by order or target size; -1 keeps each suite's default.
/// Unknown names throw std::invalid_argument.
VerifySuiteReport run_verify_suite(const std::string& suite, int max_n = -1);

nlohmann::json report_to_json(const VerifySuiteReport& r);

/// Worker count for suites: BELL_THREADS when set (floored at 1), else the
/// hardware concurrency.
int suite_thread_count();

}  // namespace bell
