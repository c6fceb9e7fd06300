#include <cstdio>
#include <string>

#include "braids/verify.hpp"

// One line per criterion: number, suite name, PASS/FAIL, elapsed time, and
// the suite's own detail or first failure.  Exits nonzero if any line fails.

namespace {

struct Criterion {
  const char* label;
  double time_limit;  // seconds; 0 = untimed
  braids::verify::SuiteResult result;
};

}  // namespace

int main() {
  using namespace braids::verify;
  Criterion cs[] = {
      {"divisor census (n <= 5)", 10, divisor_census(5)},
      {"word problem (length <= 6, 4 strands)", 120, word_problem(4, 6)},
      {"simplicity equivalence (n <= 5)", 600, simplicity_equivalence(5, 2)},
      {"worked examples", 0, worked_examples()},
      {"cycle decomposition (n <= 7)", 300, cycle_roundtrip(7)},
      {"initial sets (n <= 7, plus n = 18)", 0, initial_sets(7)},
      {"conjugacy classes (n <= 5)", 0, conjugacy_classification(5)},
      {"markov reduction (n <= 7, 100 random)", 60, markov_reduction(7, 10, 100)},
      {"link polynomial battery", 300, d_battery()},
      {"lcm identities (n <= 7)", 120, lcm_identities(7)},
  };

  bool all_ok = true;
  int num = 0;
  for (const auto& c : cs) {
    ++num;
    bool ok = c.result.passed && !c.result.skipped;
    if (c.time_limit > 0 && c.result.seconds >= c.time_limit) ok = false;
    all_ok = all_ok && ok;
    std::string timing = std::to_string(c.result.seconds);
    timing.resize(timing.find('.') + 3);
    std::printf("%2d  %-42s %s  %ss", num, c.label, ok ? "PASS" : "FAIL", timing.c_str());
    if (c.time_limit > 0) std::printf(" (limit %.0fs)", c.time_limit);
    if (!c.result.detail.empty()) std::printf("  %s", c.result.detail.c_str());
    std::printf("\n");
  }
  return all_ok ? 0 : 1;
}
