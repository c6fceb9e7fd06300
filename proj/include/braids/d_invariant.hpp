#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "braids/closure.hpp"
#include "braids/laurent.hpp"
#include "braids/normal_form.hpp"
#include "braids/orbit.hpp"
#include "braids/simple.hpp"
#include "braids/word.hpp"

namespace braids {

struct Syllable {
  int letter;
  int exponent;
};

inline std::vector<Syllable> syllables(const BraidWord& w) {
  std::vector<Syllable> out;
  for (int x : w.letters) {
    if (!out.empty() && out.back().letter == x)
      ++out.back().exponent;
    else
      out.push_back({x, 1});
  }
  return out;
}

// Conjugate by rotation until the first and last syllables have distinct
// letters; a wrap-around pair of equal letters merges into one syllable.
// The closure is unchanged.
inline BraidWord cyclic_syllable_rotation(const BraidWord& w) {
  BraidWord cur = w;
  for (;;) {
    auto syl = syllables(cur);
    if (syl.size() < 2 || syl.front().letter != syl.back().letter) return cur;
    const std::size_t tail = static_cast<std::size_t>(syl.back().exponent);
    std::vector<int> letters(cur.letters.end() - static_cast<long>(tail), cur.letters.end());
    letters.insert(letters.end(), cur.letters.begin(),
                   cur.letters.end() - static_cast<long>(tail));
    cur = BraidWord(cur.strands, std::move(letters));
  }
}

// D of the closure of x1^a: ((1-a) s^{a+1} + (1+a) s^{a-1}) / 2.
inline Laurent d_two_strand(int a) {
  if (a < 0) throw std::invalid_argument("exponent must be nonnegative");
  Laurent p;
  p.set(a + 1, make_rational(1 - a, 2));
  p.set(a - 1, p.coefficient(a - 1) + make_rational(1 + a, 2));
  return p;
}

// The link polynomial of the closure, computed by structural reduction:
// split unions factor through mu, a top generator occurring once
// destabilizes, a repeated letter expands as
//   D(..,a,..) = (1-a) s^a D(..,0,..) + a s^{a-1} D(..,1,..),
// and a square-free full-support braid is either a trivial closure or is
// conjugated until a repeated letter appears.  Values are memoized per
// braid, keyed by normal form.
class DInvariant {
 public:
  explicit DInvariant(OrbitOptions opts = {}) : opts_(opts) {}

  Laurent value(const BraidWord& w) {
    const std::string key = normal_form(w).key();
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Laurent v = compute(w);
    memo_.emplace(key, v);
    return v;
  }

 private:
  Laurent compute(const BraidWord& w) {
    if (w.empty()) return mu().pow(w.strands - 1);
    SplitParts parts = split_support(w);
    if (parts.part_count() > 1) {
      Laurent v = mu().pow(parts.part_count() - 1);
      for (const auto& g : parts.groups) v *= value(g);
      return v;
    }
    if (auto down = destabilize_once(w)) return value(*down);
    BraidWord rotated = cyclic_syllable_rotation(w);
    auto syl = syllables(rotated);
    for (std::size_t j = 0; j < syl.size(); ++j) {
      const int a = syl[j].exponent;
      if (a < 2) continue;
      std::vector<int> zero, one;
      for (std::size_t t = 0; t < syl.size(); ++t) {
        int reps = t == j ? 0 : syl[t].exponent;
        for (int r = 0; r < reps; ++r) zero.push_back(syl[t].letter);
        reps = t == j ? 1 : syl[t].exponent;
        for (int r = 0; r < reps; ++r) one.push_back(syl[t].letter);
      }
      return Laurent::monomial(Rational(1 - a), a) * value(BraidWord(w.strands, zero)) +
             Laurent::monomial(Rational(a), a - 1) * value(BraidWord(w.strands, one));
    }
    // All exponents are 1, even cyclically, and the support is full.
    if (is_literally_simple(w)) return mu().pow(closure_component_count(w) - 1);
    auto sc = find_square_conjugate(w, opts_);
    if (!sc) throw std::logic_error("no repeated letter in any conjugate");
    return value(sc->word);
  }

  std::unordered_map<std::string, Laurent> memo_;
  OrbitOptions opts_;
};

inline Laurent d_polynomial(const BraidWord& w) { return DInvariant().value(w); }

// The closure is a trivial link iff no two components cross and each
// support block closes to an unknot.  A block whose closure is a knot is
// unknotted exactly when its length is one less than its strand count;
// the polynomial check is the same fact stated through the invariant.
inline bool is_geometrically_simple(const BraidWord& w, DInvariant* calculator = nullptr) {
  if (inter_component_crossings(w) != 0) return false;
  DInvariant local;
  DInvariant& d = calculator ? *calculator : local;
  for (const auto& g : split_support(w).groups) {
    const int c = closure_component_count(g);
    if (c == 1 && g.degree() != g.strands - 1) return false;
    if (d.value(g) != mu().pow(c - 1)) return false;
  }
  return true;
}

}  // namespace braids
