#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "braids/normal_form.hpp"
#include "braids/permutation.hpp"
#include "braids/word.hpp"

namespace braids {

// Square-free braids are exactly the left (equivalently right) divisors of
// the Garside element, and they biject with permutations.  The canonical
// form of such a braid is the block word
//   (x_{k_1} ... x_{j_1}) (x_{k_2} ... x_{j_2}) ...
// with k strictly increasing and j_h <= k_h.

struct DivisorForm {
  std::vector<std::pair<int, int>> blocks;  // (k, j) with j <= k, k increasing
  BraidWord word;
};

inline DivisorForm divisor_form_of(const Permutation& p) {
  DivisorForm out;
  out.blocks = divisor_blocks(p);
  out.word = permutation_braid_word(p);
  return out;
}

// Requires a square-free input.
inline DivisorForm divisor_canonical_form(const BraidWord& w) {
  NormalForm nf = normal_form(w);
  if (!nf.is_square_free())
    throw std::invalid_argument("braid is not square-free; no divisor canonical form");
  return divisor_form_of(nf.permutation());
}

// The square-free braid realizing p, as its canonical word.
inline BraidWord permutation_to_divisor(const Permutation& p) {
  return permutation_braid_word(p);
}

inline constexpr int kDeskStrandBound = 7;

// All n! square-free braids on n strands, sorted by (degree, canonical
// word); index 0 is the unit braid.
inline std::vector<NormalForm> enumerate_divisors(int n, int strand_bound = kDeskStrandBound) {
  if (n < 1 || n > strand_bound)
    throw std::invalid_argument("divisor enumeration limited to " +
                                std::to_string(strand_bound) + " strands");
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  std::vector<std::pair<std::pair<int, std::string>, NormalForm>> keyed;
  do {
    Permutation p(img);
    NormalForm nf = NormalForm::from_factor(p);
    BraidWord w = permutation_braid_word(p);
    std::string lex(w.letters.begin(), w.letters.end());
    keyed.emplace_back(std::make_pair(w.degree(), std::move(lex)), std::move(nf));
  } while (std::next_permutation(img.begin(), img.end()));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<NormalForm> out;
  out.reserve(keyed.size());
  for (auto& [k, nf] : keyed) out.push_back(std::move(nf));
  return out;
}

}  // namespace braids
