// Print the link polynomial for the closures of a few small braids:
// the (2,a) torus family, then a couple of three and four strand words.

#include <cstdio>
#include <vector>

#include "braids/braids.hpp"

int main() {
  using namespace braids;
  DInvariant calc;
  std::vector<BraidWord> words;
  for (int a = 0; a <= 5; ++a)
    words.emplace_back(2, std::vector<int>(static_cast<std::size_t>(a), 1));
  words.push_back(parse_word("x1 x2 x1", 3));
  words.push_back(parse_word("x1 x2 x1 x2", 3));
  words.push_back(parse_word("x2 x1 x3 x2", 4));
  for (const BraidWord& w : words) {
    Laurent value = calc.value(w);
    std::printf("%-14s (%d strands)  D = %s\n", w.empty() ? "1" : to_text(w).c_str(),
                w.strands, to_string(value).c_str());
  }
  return 0;
}
