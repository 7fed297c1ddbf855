// Acceptance gate: runs every verification suite at its contractual scope and
// prints one PASS/FAIL line per criterion. Exit code = number of failures.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "bell/verify.hpp"

namespace {

struct Criterion {
  const char* label;
  const char* suite;
  int max_n;  // -1 = the suite's contractual default
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> cs = {
      {"1 figure fixtures", "figures", -1},
      {"2 clique census and classifier oracle (order <= 5, k <= 5)", "cliques",
       5},
      {"3 forbidden structures (order <= 5, k <= n+1)", "forbidden", 5},
      {"4 matching reconfiguration suite (triangle-free order <= 7)",
       "matching", 7},
      {"5 tree and cycle realization (trees <= 7, cycles 3..10)", "realize",
       -1},
      {"6 tree round-trip (orders 3..9, brooms a+b <= 8)", "tree-roundtrip",
       9},
      {"7 core round-trip (orders <= 6, disambiguation instances)",
       "core-roundtrip", 6},
      {"8 structural properties (witness counts, doubling, identities)",
       "properties", -1},
  };
  return cs;
}

}  // namespace

int main() {
  int failed = 0;
  for (const Criterion& c : criteria()) {
    bell::VerifySuiteReport rep = bell::run_verify_suite(c.suite, c.max_n);
    if (rep.ok()) {
      std::printf("PASS  criterion %s  (%d cases, %lld ms)\n", c.label,
                  rep.cases, rep.wall_ms);
    } else {
      ++failed;
      std::printf("FAIL  criterion %s  (%zu failures in %d cases, %lld ms)\n",
                  c.label, rep.failures.size(), rep.cases, rep.wall_ms);
      std::size_t shown = 0;
      for (const bell::VerifyFailure& f : rep.failures) {
        if (++shown > 5) {
          std::printf("      ... and %zu more\n", rep.failures.size() - shown + 1);
          break;
        }
        std::printf("      input: %s\n      expected: %s\n      actual: %s\n",
                    f.input.c_str(), f.expected.c_str(), f.actual.c_str());
      }
    }
    std::fflush(stdout);
  }
  return failed;
}
