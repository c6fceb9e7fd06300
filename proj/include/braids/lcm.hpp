#pragma once

#include <optional>
#include <queue>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "braids/normal_form.hpp"
#include "braids/very_simple.hpp"
#include "braids/word.hpp"

namespace braids {

// Closed-form least common left multiple of a generator x_i and a single
// ascending or descending run, by case analysis on where i sits relative
// to the run's extended support.  Valid for all runs including single
// letters.
inline BraidWord left_lcm_formula(int i, const VerySimpleFactor& f, int strands) {
  if (i < 1 || i >= strands) throw std::invalid_argument("generator index out of range");
  if (f.hi() >= strands) throw std::invalid_argument("factor does not fit in strand count");
  std::vector<int> w;
  auto push_run = [&](int from, int to) {
    if (from <= to)
      for (int k = from; k <= to; ++k) w.push_back(k);
    else
      for (int k = from; k >= to; --k) w.push_back(k);
  };
  if (f.is_ascending()) {
    const int a = f.from, b = f.to;
    if (i == a) {
      push_run(a, b);
    } else if (i == a - 1) {
      // x_{a-1} D(a,a-1) D(a+1,a) ... D(b,b-1)
      w.push_back(a - 1);
      for (int k = a; k <= b; ++k) push_run(k, k - 1);
    } else if (i == b + 1) {
      w.push_back(b + 1);
      push_run(a, b + 1);
    } else {
      // inside the run or away from it: x_i and the run have a short lcm
      w.push_back(i);
      push_run(a, b);
    }
  } else {
    const int c = f.from, d = f.to;
    if (i == c) {
      push_run(c, d);
    } else if (i == c + 1) {
      w.push_back(c + 1);
      push_run(c, d);
      push_run(c + 1, d + 1);
    } else if (i == d - 1) {
      w.push_back(d - 1);
      push_run(c, d - 1);
    } else {
      w.push_back(i);
      push_run(c, d);
    }
  }
  return BraidWord(strands, std::move(w));
}

struct LcmSearchResult {
  std::optional<BraidWord> lcm;
  bool bound_exceeded = false;
};

// Shortest common left multiple of a and b by breadth-first search over
// right multiplications.  lcm is symmetric, so the search starts from the
// higher-degree input (smaller extension to find) and stops at the first
// multiple of the other; one letter per step makes the first hit least.
// Common multiples always exist here, so exhaustion only means the degree
// bound cut the search short.
inline LcmSearchResult brute_force_left_lcm(const BraidWord& a, const BraidWord& b,
                                            int max_degree = 16) {
  if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch");
  const BraidWord& base = a.degree() >= b.degree() ? a : b;
  const BraidWord& other = a.degree() >= b.degree() ? b : a;
  std::queue<NormalForm> frontier;
  std::unordered_set<std::string> seen;
  NormalForm start = normal_form(base);
  seen.insert(start.key());
  frontier.push(std::move(start));
  while (!frontier.empty()) {
    NormalForm cur = std::move(frontier.front());
    frontier.pop();
    if (left_quotient(other, cur).has_value()) return {cur.canonical_word(), false};
    if (cur.degree() >= max_degree) continue;
    for (int j = 1; j < a.strands; ++j) {
      NormalForm next = cur;
      next.append_letter(j);
      if (seen.insert(next.key()).second) frontier.push(std::move(next));
    }
  }
  return {std::nullopt, true};
}

}  // namespace braids
