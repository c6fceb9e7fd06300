#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braids/normal_form.hpp"
#include "braids/simple.hpp"
#include "braids/word.hpp"

namespace braids {

// MI is conjugation by a positive braid (legal when the conjugate stays
// positive); MII trades the braid b on n strands for b*x_n on n+1 strands
// or back.
enum class MoveKind { ConjugationMI, DestabilizeMII, StabilizeMII };

inline const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::ConjugationMI: return "MI";
    case MoveKind::DestabilizeMII: return "MII_destabilize";
    case MoveKind::StabilizeMII: return "MII_stabilize";
  }
  return "?";
}

struct MarkovMove {
  MoveKind kind = MoveKind::ConjugationMI;
  std::optional<BraidWord> conjugator;  // MI only
  int strands_before = 1;
  int strands_after = 1;
};

class ReplayError : public std::runtime_error {
 public:
  ReplayError(std::size_t index, const std::string& what)
      : std::runtime_error("move " + std::to_string(index) + ": " + what), index_(index) {}
  [[nodiscard]] std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// Removing the top strand is legal when the braid is b0 * x_{n-1} with b0
// not using x_{n-1}; equivalently x_{n-1} divides on the right and the
// quotient avoids it.
inline std::optional<NormalForm> destabilized(const NormalForm& nf) {
  const int m = nf.strands();
  if (m < 2) return std::nullopt;
  auto q = right_quotient(nf.canonical_word(), BraidWord(m, {m - 1}));
  if (!q) return std::nullopt;
  BraidWord qw = q->canonical_word();
  for (int x : qw.letters)
    if (x == m - 1) return std::nullopt;
  return normal_form(BraidWord(m - 1, qw.letters));
}

// Reduce a literally simple braid to a unit braid.  Strategy: while the
// top support component reaches the top strand, rotate its single highest
// letter to the end (MI by the preceding prefix) and destabilize; when
// trivial strands sit above it, hoist the whole component one strand up
// (MI by the descending run over its widened support, which commutes with
// everything below).  Each destabilization removes one letter, so the
// trace ends at the unit braid on (components of the closure) strands.
inline std::vector<MarkovMove> markov_reduce(const BraidWord& w) {
  if (!is_literally_simple(w))
    throw std::invalid_argument("markov reduction requires a literally simple braid");
  std::vector<MarkovMove> moves;
  BraidWord cur = w;
  while (!cur.letters.empty()) {
    const int m = cur.strands;
    auto comps = support_components(cur);
    auto [b, e] = comps.back();
    if (e == m - 1) {
      auto it = std::find(cur.letters.begin(), cur.letters.end(), m - 1);
      std::size_t t = static_cast<std::size_t>(it - cur.letters.begin());
      if (t + 1 != cur.letters.size()) {
        std::vector<int> prefix(cur.letters.begin(), it + 1);
        std::vector<int> rotated(it + 1, cur.letters.end());
        rotated.insert(rotated.end(), prefix.begin(), prefix.end());
        moves.push_back({MoveKind::ConjugationMI, BraidWord(m, prefix), m, m});
        cur.letters = std::move(rotated);
      }
      cur.letters.pop_back();
      cur = BraidWord(m - 1, cur.letters);
      moves.push_back({MoveKind::DestabilizeMII, std::nullopt, m, m - 1});
    } else {
      std::vector<int> conj;
      for (int k = e + 1; k >= b; --k) conj.push_back(k);
      moves.push_back({MoveKind::ConjugationMI, BraidWord(m, conj), m, m});
      for (int& x : cur.letters)
        if (x >= b) ++x;
    }
  }
  return moves;
}

// Apply a move trace, validating every step; throws ReplayError with the
// index of the first illegal move.
inline BraidWord replay_moves(const BraidWord& start, const std::vector<MarkovMove>& moves) {
  NormalForm cur = normal_form(start);
  for (std::size_t idx = 0; idx < moves.size(); ++idx) {
    const MarkovMove& mv = moves[idx];
    const int m = cur.strands();
    if (mv.strands_before != m) throw ReplayError(idx, "strand count mismatch");
    switch (mv.kind) {
      case MoveKind::ConjugationMI: {
        if (!mv.conjugator) throw ReplayError(idx, "conjugation move without conjugator");
        if (mv.conjugator->strands != m || mv.strands_after != m)
          throw ReplayError(idx, "conjugation cannot change strand count");
        NormalForm wd = cur;
        wd.append(normal_form(*mv.conjugator));
        auto q = left_quotient(*mv.conjugator, wd);
        if (!q) throw ReplayError(idx, "conjugate is not a positive braid");
        cur = *q;
        break;
      }
      case MoveKind::DestabilizeMII: {
        if (mv.strands_after != m - 1) throw ReplayError(idx, "destabilization drops one strand");
        auto down = destabilized(cur);
        if (!down) throw ReplayError(idx, "braid is not of the form b * x_{n-1}");
        cur = *down;
        break;
      }
      case MoveKind::StabilizeMII: {
        if (mv.strands_after != m + 1) throw ReplayError(idx, "stabilization adds one strand");
        BraidWord word = cur.canonical_word();
        word.letters.push_back(m);
        cur = normal_form(BraidWord(m + 1, word.letters));
        break;
      }
    }
  }
  return cur.canonical_word();
}

}  // namespace braids
