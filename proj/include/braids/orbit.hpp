#pragma once

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "braids/divisors.hpp"
#include "braids/markov.hpp"
#include "braids/normal_form.hpp"
#include "braids/word.hpp"

namespace braids {

class BoundExceeded : public std::runtime_error {
 public:
  explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

// d^{-1} w d when that braid is positive: d must divide w*d on the left.
inline std::optional<NormalForm> conjugate_by(const NormalForm& w, const BraidWord& d) {
  if (w.strands() != d.strands) throw std::invalid_argument("strand count mismatch");
  NormalForm wd = w;
  wd.append(normal_form(d));
  return left_quotient(d, wd);
}

inline std::optional<NormalForm> conjugate_by(const BraidWord& w, const BraidWord& d) {
  return conjugate_by(normal_form(w), d);
}

namespace detail {

// Square-free conjugators with their canonical words, unit omitted,
// cached per strand count.  Conjugating a positive braid by generators
// alone does not reach the whole positive conjugacy class; the full set
// of square-free conjugators does.
struct ConjugatorTable {
  std::vector<NormalForm> divisors;
  std::vector<BraidWord> words;
};

inline const ConjugatorTable& conjugator_table(int n) {
  static std::mutex mu;
  static std::unordered_map<int, ConjugatorTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    ConjugatorTable t;
    for (auto& d : enumerate_divisors(n)) {
      if (d.is_unit()) continue;
      t.words.push_back(d.canonical_word());
      t.divisors.push_back(std::move(d));
    }
    it = cache.emplace(n, std::move(t)).first;
  }
  return it->second;
}

// A representative word showing an explicit repeated letter; requires a
// braid that is not square-free.  The first two factors share a boundary
// letter x_i, which the left-weighted condition makes adjacent.
inline BraidWord square_exhibiting_word(const NormalForm& nf) {
  const auto& fs = nf.factors();
  if (fs.size() < 2) throw std::invalid_argument("braid is square-free");
  Permutation a = fs[0];
  Permutation b = fs[1];
  int i = b.descents().front();
  a.append_transposition(i);       // fs[0] with one x_i removed from the right
  b.strip_front_transposition(i);  // fs[1] with one x_i removed from the left
  std::vector<int> letters = permutation_braid_word(a).letters;
  letters.push_back(i);
  letters.push_back(i);
  auto bw = permutation_braid_word(b).letters;
  letters.insert(letters.end(), bw.begin(), bw.end());
  for (std::size_t t = 2; t < fs.size(); ++t) {
    auto fw = permutation_braid_word(fs[t]).letters;
    letters.insert(letters.end(), fw.begin(), fw.end());
  }
  return BraidWord(nf.strands(), std::move(letters));
}

inline bool has_adjacent_repeat(const BraidWord& w) {
  for (std::size_t t = 0; t + 1 < w.letters.size(); ++t)
    if (w.letters[t] == w.letters[t + 1]) return true;
  return false;
}

struct OrbitHit {
  NormalForm member;
  BraidWord chain;  // composed conjugator taking the start to the member
};

// Breadth-first walk of the positive conjugates of `start`, calling
// `visit` on each new member; a true `accept` stops the walk and reports
// the member with its conjugator chain.  Deterministic: FIFO frontier,
// conjugators in canonical order.
inline std::optional<OrbitHit> orbit_walk(
    NormalForm start, std::size_t max_size, bool* complete,
    const std::function<bool(const NormalForm&)>& accept,
    const std::function<void(const NormalForm&)>& visit = nullptr) {
  const auto& table = conjugator_table(start.strands());
  std::unordered_map<std::string, std::pair<std::string, std::size_t>> parent;
  std::deque<NormalForm> frontier;
  const std::string start_key = start.key();
  if (complete) *complete = true;

  auto chain_to = [&](std::string key) {
    std::vector<int> letters;
    while (key != start_key) {
      const auto& [pk, di] = parent.at(key);
      const auto& dw = table.words[di].letters;
      letters.insert(letters.begin(), dw.begin(), dw.end());
      key = pk;
    }
    return BraidWord(start.strands(), std::move(letters));
  };

  parent.emplace(start_key, std::make_pair(std::string(), table.words.size()));
  if (visit) visit(start);
  if (accept && accept(start)) return OrbitHit{start, chain_to(start_key)};
  frontier.push_back(std::move(start));
  while (!frontier.empty()) {
    NormalForm cur = std::move(frontier.front());
    frontier.pop_front();
    const std::string cur_key = cur.key();
    for (std::size_t di = 0; di < table.divisors.size(); ++di) {
      NormalForm wd = cur;
      wd.append(table.divisors[di]);
      auto next = left_quotient(table.words[di], wd);
      if (!next) continue;
      std::string key = next->key();
      if (parent.contains(key)) continue;
      if (parent.size() >= max_size) {
        if (complete) *complete = false;
        return std::nullopt;
      }
      parent.emplace(key, std::make_pair(cur_key, di));
      if (visit) visit(*next);
      if (accept && accept(*next)) return OrbitHit{*next, chain_to(key)};
      frontier.push_back(std::move(*next));
    }
  }
  return std::nullopt;
}

}  // namespace detail

struct SquareWitness {
  BraidWord conjugator;  // composed chain taking the input to the witness
  BraidWord word;        // a representative of the conjugate showing x_i^2
};

struct OrbitResult {
  std::vector<NormalForm> members;  // sorted by canonical word
  bool all_square_free = true;
  std::optional<SquareWitness> witness;  // first non-square-free member found
  bool complete = true;
};

struct OrbitOptions {
  std::size_t max_size = 1'000'000;
};

inline std::size_t orbit_bound_from_env(std::size_t fallback) {
  if (const char* env = std::getenv("BRAID_MAX_ORBIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return fallback;
}

inline BraidWord witness_word_for(const NormalForm& nf) {
  BraidWord word = nf.canonical_word();
  if (!detail::has_adjacent_repeat(word)) word = detail::square_exhibiting_word(nf);
  return word;
}

// All positive braids conjugate to w, discovered breadth-first by
// conjugating with square-free braids in canonical order.  The reported
// witness is the non-square-free member least by canonical word (all
// members share one degree, so this is the (length, lexicographic) least).
inline OrbitResult positive_conjugacy_orbit(const BraidWord& w, OrbitOptions opts = {}) {
  OrbitResult result;
  detail::orbit_walk(normal_form(w), opts.max_size, &result.complete, nullptr,
                     [&](const NormalForm& nf) { result.members.push_back(nf); });
  const NormalForm* best = nullptr;
  for (const auto& m : result.members)
    if (!m.is_square_free() && (!best || m.key() < best->key())) best = &m;
  if (best) {
    result.all_square_free = false;
    const std::string target = best->key();
    bool rerun_complete = true;
    auto hit = detail::orbit_walk(normal_form(w), opts.max_size, &rerun_complete,
                                  [&](const NormalForm& m) { return m.key() == target; });
    result.witness = SquareWitness{hit->chain, witness_word_for(hit->member)};
  }
  std::sort(result.members.begin(), result.members.end(),
            [](const NormalForm& a, const NormalForm& b) { return a.key() < b.key(); });
  return result;
}

// True iff every positive conjugate is square-free.
inline bool is_conjugate_simple(const BraidWord& w, OrbitOptions opts = {}) {
  bool complete = true;
  auto hit = detail::orbit_walk(normal_form(w), opts.max_size, &complete,
                                [](const NormalForm& nf) { return !nf.is_square_free(); });
  if (hit) return false;
  if (!complete) throw BoundExceeded("conjugacy orbit exceeded the size bound");
  return true;
}

// Membership in the largest conjugation-invariant subset of the
// square-free braids: the braid's whole conjugacy class must stay
// square-free, which is the same test.
inline bool is_invariant_simple(const BraidWord& w, OrbitOptions opts = {}) {
  return is_conjugate_simple(w, opts);
}

struct SquareConjugate {
  BraidWord conjugator;
  BraidWord word;
};

// A positive conjugate that is not square-free, as a word with an explicit
// repeated letter.  Cyclic rotations of the canonical word are tried
// first (they preserve the support); the orbit search that follows
// prefers conjugates with the same support as the input.  Empty when
// every positive conjugate is square-free.
inline std::optional<SquareConjugate> find_square_conjugate(const BraidWord& w,
                                                            OrbitOptions opts = {}) {
  NormalForm nf = normal_form(w);
  if (!nf.is_square_free()) return SquareConjugate{unit_braid(w.strands), witness_word_for(nf)};
  BraidWord cw = nf.canonical_word();
  const std::size_t len = cw.letters.size();
  for (std::size_t cut = 1; cut < len; ++cut) {
    std::vector<int> rot(cw.letters.begin() + static_cast<long>(cut), cw.letters.end());
    rot.insert(rot.end(), cw.letters.begin(), cw.letters.begin() + static_cast<long>(cut));
    BraidWord rotated(w.strands, std::move(rot));
    NormalForm rnf = normal_form(rotated);
    if (!rnf.is_square_free()) {
      BraidWord witness =
          detail::has_adjacent_repeat(rotated) ? rotated : detail::square_exhibiting_word(rnf);
      std::vector<int> prefix(cw.letters.begin(), cw.letters.begin() + static_cast<long>(cut));
      return SquareConjugate{BraidWord(w.strands, std::move(prefix)), std::move(witness)};
    }
  }
  const std::vector<int> want = support(cw);
  bool complete = true;
  auto same_support_hit = detail::orbit_walk(
      nf, opts.max_size, &complete, [&](const NormalForm& m) {
        return !m.is_square_free() && support(m.canonical_word()) == want;
      });
  if (same_support_hit)
    return SquareConjugate{same_support_hit->chain, witness_word_for(same_support_hit->member)};
  auto any_hit = detail::orbit_walk(nf, opts.max_size, &complete,
                                    [](const NormalForm& m) { return !m.is_square_free(); });
  if (any_hit) return SquareConjugate{any_hit->chain, witness_word_for(any_hit->member)};
  if (!complete) throw BoundExceeded("conjugacy orbit exceeded the size bound");
  return std::nullopt;
}

// Two positive braids are conjugate iff one's orbit contains the other.
inline bool are_conjugate(const BraidWord& u, const BraidWord& v, OrbitOptions opts = {}) {
  if (u.strands != v.strands) throw std::invalid_argument("strand count mismatch");
  NormalForm un = normal_form(u), vn = normal_form(v);
  if (un.degree() != vn.degree()) return false;
  const std::string target = vn.key();
  bool complete = true;
  auto hit = detail::orbit_walk(std::move(un), opts.max_size, &complete,
                                [&](const NormalForm& m) { return m.key() == target; });
  if (hit) return true;
  if (!complete) throw BoundExceeded("conjugacy orbit exceeded the size bound");
  return false;
}

struct MarkovSearchOptions {
  std::size_t max_states = 1'000'000;
};

// Shared verdicts for bounded Markov searches: every state reached within
// the same strand ceiling has the same closure, hence the same verdict.
class MarkovVerdictCache {
 public:
  std::unordered_map<std::string, bool> verdicts;
};

// Semi-decision for Markov-simplicity: explore the closure of {w} under
// positive conjugation and (de)stabilization with at most `extra_strands`
// added strands; true iff every braid reached is square-free.
inline bool is_markov_simple_bounded(const BraidWord& w, int extra_strands,
                                     MarkovSearchOptions opts = {},
                                     MarkovVerdictCache* cache = nullptr) {
  if (extra_strands < 0) throw std::invalid_argument("extra strand count must be nonnegative");
  const int max_n = w.strands + extra_strands;
  if (max_n > kDeskStrandBound)
    throw std::invalid_argument("strand ceiling above the enumeration bound");
  auto cache_key = [&](const std::string& k) {
    return std::string(1, static_cast<char>(max_n)) + k;
  };
  NormalForm start = normal_form(w);
  if (cache) {
    auto it = cache->verdicts.find(cache_key(start.key()));
    if (it != cache->verdicts.end()) return it->second;
  }
  std::unordered_set<std::string> visited;
  std::deque<NormalForm> frontier;
  visited.insert(start.key());
  frontier.push_back(std::move(start));
  bool verdict = true;
  auto enqueue = [&](NormalForm nf) {
    if (!visited.insert(nf.key()).second) return;
    if (visited.size() > opts.max_states)
      throw BoundExceeded("Markov closure exceeded the state bound");
    frontier.push_back(std::move(nf));
  };
  while (!frontier.empty()) {
    NormalForm cur = std::move(frontier.front());
    frontier.pop_front();
    if (!cur.is_square_free()) {
      verdict = false;
      break;
    }
    const int m = cur.strands();
    const auto& table = detail::conjugator_table(m);
    for (std::size_t di = 0; di < table.divisors.size(); ++di) {
      NormalForm wd = cur;
      wd.append(table.divisors[di]);
      if (auto next = left_quotient(table.words[di], wd)) enqueue(std::move(*next));
    }
    if (m < max_n) {
      BraidWord up = cur.canonical_word();
      up.letters.push_back(m);
      enqueue(normal_form(BraidWord(m + 1, up.letters)));
    }
    if (auto down = destabilized(cur)) enqueue(std::move(*down));
  }
  if (cache)
    for (const auto& k : visited) cache->verdicts[cache_key(k)] = verdict;
  return verdict;
}

}  // namespace braids
