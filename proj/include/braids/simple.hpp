#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "braids/divisors.hpp"
#include "braids/very_simple.hpp"
#include "braids/word.hpp"

namespace braids {

// Each generator used at most once.  Both the length and the letter set
// are invariant across representatives, so the test works on any word.
inline bool is_literally_simple(const BraidWord& w) {
  return support(w).size() == w.letters.size();
}

// A cycle: a product of ascending/descending runs whose supports are
// consecutive intervals, never two ascending runs in a row.  Its closure
// contributes a single component spanning hi()-lo()+2 strands.
struct Cycle {
  std::vector<VerySimpleFactor> factors;

  void validate() const {
    if (factors.empty()) throw std::invalid_argument("a cycle has at least one factor");
    for (std::size_t t = 0; t + 1 < factors.size(); ++t) {
      if (factors[t + 1].lo() != factors[t].hi() + 1)
        throw std::invalid_argument("cycle factors must have consecutive supports");
      if (factors[t].is_ascending() && factors[t + 1].is_ascending())
        throw std::invalid_argument("cycle cannot contain two ascending runs in a row");
    }
  }

  [[nodiscard]] int lo() const { return factors.front().lo(); }
  [[nodiscard]] int hi() const { return factors.back().hi(); }
  [[nodiscard]] int strand_span() const { return hi() - lo() + 2; }

  [[nodiscard]] std::vector<int> letters() const {
    std::vector<int> out;
    for (const auto& f : factors) {
      auto fl = f.letters();
      out.insert(out.end(), fl.begin(), fl.end());
    }
    return out;
  }

  [[nodiscard]] std::string to_string() const {
    std::string s = "[";
    for (std::size_t t = 0; t < factors.size(); ++t) {
      if (t) s += ' ';
      s += factors[t].to_string();
    }
    return s + "]";
  }

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

struct CycleDecomposition {
  int strands = 1;
  std::vector<Cycle> cycles;

  void validate() const {
    for (const auto& c : cycles) {
      c.validate();
      if (c.hi() >= strands) throw std::invalid_argument("cycle does not fit in strand count");
    }
    for (std::size_t t = 0; t + 1 < cycles.size(); ++t)
      if (cycles[t + 1].lo() <= cycles[t].hi() + 1)
        throw std::invalid_argument("cycles must have disjoint supports in increasing order");
  }

  [[nodiscard]] std::string to_string() const {
    std::string s;
    for (const auto& c : cycles) s += c.to_string();
    return s;
  }

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

// The unique decomposition of a literally simple braid into cycles with
// pairwise disjoint supports: read runs off the canonical block form, fuse
// adjacent single-letter ascents, and split at support gaps.
inline CycleDecomposition cycle_decomposition(const BraidWord& w) {
  if (!is_literally_simple(w))
    throw std::invalid_argument("cycle decomposition requires a literally simple braid");
  DivisorForm form = divisor_canonical_form(w);
  std::vector<VerySimpleFactor> factors;
  for (auto [k, j] : form.blocks) {
    if (k == j) {
      if (!factors.empty() && factors.back().is_ascending() && factors.back().to + 1 == k)
        factors.back().to = k;  // extend an ascending run
      else
        factors.push_back(VerySimpleFactor::ascending(k, k));
    } else {
      factors.push_back(VerySimpleFactor::descending(k, j));
    }
  }
  CycleDecomposition out;
  out.strands = w.strands;
  for (const auto& f : factors) {
    if (out.cycles.empty() || f.lo() > out.cycles.back().hi() + 1)
      out.cycles.push_back(Cycle{});
    out.cycles.back().factors.push_back(f);
  }
  out.validate();
  return out;
}

inline std::string to_string(const Cycle& c) { return c.to_string(); }
inline std::string to_string(const CycleDecomposition& d) { return d.to_string(); }

inline BraidWord cycles_to_braid(const CycleDecomposition& d) {
  d.validate();
  std::vector<int> letters;
  for (const auto& c : d.cycles) {
    auto cl = c.letters();
    letters.insert(letters.end(), cl.begin(), cl.end());
  }
  return BraidWord(d.strands, std::move(letters));
}

// Generators dividing the braid on the left, read off the cycle structure:
// per cycle, the first letter of the leading factor together with the
// first letter of every descending factor.
inline std::vector<int> cycle_initial_set(const CycleDecomposition& d) {
  std::vector<int> out;
  for (const auto& c : d.cycles) {
    out.push_back(c.factors.front().first_letter());
    for (std::size_t t = 1; t < c.factors.size(); ++t)
      if (!c.factors[t].is_ascending()) out.push_back(c.factors[t].first_letter());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The conjugacy invariant of a literally simple braid: the decreasing list
// of strand spans of its cycles.
struct ConjugacyType {
  std::vector<int> parts;  // decreasing, each >= 2
  int strands = 1;

  void validate() const {
    int sum = 0;
    for (std::size_t t = 0; t < parts.size(); ++t) {
      if (parts[t] < 2) throw std::invalid_argument("conjugacy type parts must be at least 2");
      if (t && parts[t] > parts[t - 1])
        throw std::invalid_argument("conjugacy type parts must be decreasing");
      sum += parts[t];
    }
    if (sum > strands) throw std::invalid_argument("conjugacy type does not fit in strand count");
  }

  [[nodiscard]] int trivial_strands() const {
    return strands - std::accumulate(parts.begin(), parts.end(), 0);
  }

  [[nodiscard]] std::string to_string() const {
    std::string s = "A=(";
    for (std::size_t t = 0; t < parts.size(); ++t) {
      if (t) s += ',';
      s += std::to_string(parts[t]);
    }
    s += "); n=" + std::to_string(strands) + "; trivial=" + std::to_string(trivial_strands());
    return s;
  }

  friend bool operator==(const ConjugacyType&, const ConjugacyType&) = default;
};

inline std::string to_string(const ConjugacyType& t) { return t.to_string(); }

inline ConjugacyType conjugacy_type(const BraidWord& w) {
  CycleDecomposition d = cycle_decomposition(w);
  ConjugacyType t;
  t.strands = w.strands;
  for (const auto& c : d.cycles) t.parts.push_back(c.strand_span());
  std::sort(t.parts.rbegin(), t.parts.rend());
  t.validate();
  return t;
}

// The stacked-ascending-block representative of a conjugacy type:
// (x_1 .. x_{s_1 - 1})(x_{s_1 + 1} .. x_{s_2 - 1})... with s_i the partial
// sums of the parts.
inline BraidWord canonical_conjugacy_word(const ConjugacyType& t) {
  t.validate();
  std::vector<int> letters;
  int s = 0;
  for (int part : t.parts) {
    for (int i = s + 1; i <= s + part - 1; ++i) letters.push_back(i);
    s += part;
  }
  return BraidWord(t.strands, std::move(letters));
}

}  // namespace braids
