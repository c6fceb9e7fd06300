// Walk the square-free braids on four strands and classify each one:
// simple or not, cycle decomposition, conjugacy type.

#include <cstdio>

#include "braids/braids.hpp"

int main() {
  using namespace braids;
  const int n = 4;
  int simple_count = 0;
  for (const auto& d : enumerate_divisors(n)) {
    BraidWord w = d.canonical_word();
    if (!is_literally_simple(w)) {
      std::printf("%-18s  not simple\n", w.empty() ? "1" : to_text(w).c_str());
      continue;
    }
    ++simple_count;
    CycleDecomposition dec = cycle_decomposition(w);
    ConjugacyType type = conjugacy_type(w);
    std::printf("%-18s  %-22s  %s\n", w.empty() ? "1" : to_text(w).c_str(),
                dec.to_string().c_str(), type.to_string().c_str());
  }
  std::printf("%d of %d square-free braids are simple\n", simple_count, 24);
  return 0;
}
