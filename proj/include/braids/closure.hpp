#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "braids/permutation.hpp"
#include "braids/rational.hpp"
#include "braids/word.hpp"

namespace braids {

// Components of the closed-up braid: cycles of the underlying permutation,
// labelled 0.. in order of their smallest start position.
inline std::vector<std::vector<int>> closure_components(const BraidWord& w) {
  return word_to_permutation(w).cycles();
}

inline int closure_component_count(const BraidWord& w) {
  return static_cast<int>(closure_components(w).size());
}

// component_of[i] = label of the component through start position i (1-based).
inline std::vector<int> closure_component_labels(const BraidWord& w) {
  auto cycles = closure_components(w);
  std::vector<int> label(static_cast<std::size_t>(w.strands) + 1, -1);
  for (std::size_t c = 0; c < cycles.size(); ++c)
    for (int i : cycles[c]) label[static_cast<std::size_t>(i)] = static_cast<int>(c);
  return label;
}

// crossings[a][b] = number of crossings between components a and b in the
// closed diagram (diagonal: self-crossings).  Positions are tracked
// letter by letter; x_k crosses the strands currently at k and k+1.
inline std::vector<std::vector<int>> crossing_matrix(const BraidWord& w) {
  auto label = closure_component_labels(w);
  const int c = closure_component_count(w);
  std::vector<std::vector<int>> m(static_cast<std::size_t>(c),
                                  std::vector<int>(static_cast<std::size_t>(c), 0));
  std::vector<int> at(static_cast<std::size_t>(w.strands) + 1);  // at[pos] = start position
  for (int i = 1; i <= w.strands; ++i) at[static_cast<std::size_t>(i)] = i;
  for (int x : w.letters) {
    int a = label[static_cast<std::size_t>(at[static_cast<std::size_t>(x)])];
    int b = label[static_cast<std::size_t>(at[static_cast<std::size_t>(x + 1)])];
    ++m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    if (a != b) ++m[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
    std::swap(at[static_cast<std::size_t>(x)], at[static_cast<std::size_t>(x + 1)]);
  }
  return m;
}

// Half the crossing counts.  Every crossing here is positive, so only the
// magnitude is meaningful and separation is equivalent to a zero entry.
inline std::vector<std::vector<Rational>> linking_matrix(const BraidWord& w) {
  auto counts = crossing_matrix(w);
  std::vector<std::vector<Rational>> m(counts.size());
  for (std::size_t a = 0; a < counts.size(); ++a)
    for (std::size_t b = 0; b < counts.size(); ++b)
      m[a].push_back(Rational(counts[a][b]) / Rational(2));
  return m;
}

inline int inter_component_crossings(const BraidWord& w) {
  auto m = crossing_matrix(w);
  int total = 0;
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b) total += m[a][b];
  return total;
}

// The closure of a braid whose support misses some indices splits.  Each
// support block [a,b] contributes the subword on strands a..b+1 (letters
// shifted down to start at x1); strands touched by no block close into
// split unknotted circles.
struct SplitParts {
  std::vector<BraidWord> groups;
  int trivial_strands = 0;

  [[nodiscard]] int part_count() const {
    return static_cast<int>(groups.size()) + trivial_strands;
  }
};

inline SplitParts split_support(const BraidWord& w) {
  SplitParts parts;
  int used = 0;
  for (auto [a, b] : support_components(w)) {
    std::vector<int> letters;
    for (int x : w.letters)
      if (x >= a && x <= b) letters.push_back(x - (a - 1));
    parts.groups.emplace_back(b - a + 2, std::move(letters));
    used += b - a + 2;
  }
  parts.trivial_strands = w.strands - used;
  return parts;
}

// When the top generator occurs exactly once, the closure is unchanged by
// rotating it to the end and removing it together with the top strand.
inline std::optional<BraidWord> destabilize_once(const BraidWord& w) {
  if (w.strands < 2) return std::nullopt;
  const int top = w.strands - 1;
  int count = 0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < w.letters.size(); ++i)
    if (w.letters[i] == top) {
      ++count;
      at = i;
    }
  if (count != 1) return std::nullopt;
  std::vector<int> letters;
  letters.reserve(w.letters.size() - 1);
  for (std::size_t i = at + 1; i < w.letters.size(); ++i) letters.push_back(w.letters[i]);
  for (std::size_t i = 0; i < at; ++i) letters.push_back(w.letters[i]);
  return BraidWord(w.strands - 1, std::move(letters));
}

}  // namespace braids
