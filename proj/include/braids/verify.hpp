#pragma once

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "braids/braids.hpp"

namespace braids::verify {

struct SuiteResult {
  std::string name;
  bool passed = true;
  bool skipped = false;
  long checks = 0;
  std::string detail;
  double seconds = 0.0;
};

namespace detail {

class Recorder {
 public:
  explicit Recorder(std::string name) : result_{std::move(name)}, start_(clock::now()) {}

  void require(bool ok, const std::string& what) {
    ++result_.checks;
    if (result_.passed && !ok) {
      result_.passed = false;
      result_.detail = what;
    }
  }

  void note(const std::string& text) {
    if (result_.passed && result_.detail.empty()) result_.detail = text;
  }

  [[nodiscard]] bool failed() const { return !result_.passed; }

  SuiteResult finish() {
    result_.seconds =
        std::chrono::duration<double>(clock::now() - start_).count();
    return std::move(result_);
  }

  SuiteResult skip(const std::string& why) {
    result_.skipped = true;
    result_.passed = true;
    result_.detail = why;
    return finish();
  }

 private:
  using clock = std::chrono::steady_clock;
  SuiteResult result_;
  clock::time_point start_;
};

template <typename Body>
SuiteResult run_suite(const std::string& name, Body body) {
  Recorder rec(name);
  try {
    body(rec);
  } catch (const BoundExceeded& e) {
    return rec.skip(std::string("bound exceeded: ") + e.what());
  } catch (const std::exception& e) {
    rec.require(false, std::string("exception: ") + e.what());
  }
  return rec.finish();
}

inline long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// All words of the given length over generators 1..strands-1, in odometer
// order.
inline void for_each_word(int strands, int length, const std::function<void(const BraidWord&)>& f) {
  std::vector<int> letters(static_cast<std::size_t>(length), 1);
  if (strands < 2) {
    if (length == 0) f(unit_braid(strands));
    return;
  }
  for (;;) {
    f(BraidWord(strands, letters));
    int pos = length - 1;
    while (pos >= 0 && letters[static_cast<std::size_t>(pos)] == strands - 1) {
      letters[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) return;
    ++letters[static_cast<std::size_t>(pos)];
  }
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

inline std::vector<BraidWord> literally_simple_words(int n) {
  std::vector<BraidWord> out;
  for (const auto& d : enumerate_divisors(n)) {
    BraidWord w = d.canonical_word();
    if (is_literally_simple(w)) out.push_back(std::move(w));
  }
  return out;
}

// A uniformly structured random braid with no repeated letter.
inline BraidWord random_simple_word(std::mt19937& rng, int max_n) {
  std::uniform_int_distribution<int> nd(2, max_n);
  const int n = nd(rng);
  std::vector<int> letters(static_cast<std::size_t>(n - 1));
  std::iota(letters.begin(), letters.end(), 1);
  std::shuffle(letters.begin(), letters.end(), rng);
  std::uniform_int_distribution<int> sd(0, n - 1);
  letters.resize(static_cast<std::size_t>(sd(rng)));
  return BraidWord(n, std::move(letters));
}

inline BraidWord random_word(std::mt19937& rng, int strands, int max_len) {
  std::uniform_int_distribution<int> ld(0, max_len);
  std::uniform_int_distribution<int> xd(1, strands - 1);
  std::vector<int> letters(static_cast<std::size_t>(ld(rng)));
  for (int& x : letters) x = xd(rng);
  return BraidWord(strands, std::move(letters));
}

}  // namespace detail

// |Div(Delta_n)| = n! and the word/permutation round trip is the identity.
inline SuiteResult divisor_census(int max_n = 5) {
  return detail::run_suite("divisor census", [&](detail::Recorder& rec) {
    std::ostringstream counts;
    for (int n = 1; n <= max_n; ++n) {
      auto divisors = enumerate_divisors(n);
      rec.require(static_cast<long>(divisors.size()) == detail::factorial(n),
                  "census mismatch at " + std::to_string(n) + " strands");
      std::set<std::string> keys;
      for (const auto& d : divisors) {
        rec.require(d.is_square_free(), "divisor with a repeated factor");
        BraidWord w = d.canonical_word();
        BraidWord round = permutation_to_divisor(word_to_permutation(w));
        rec.require(round == w, "round trip changed " + to_text(w));
        keys.insert(d.key());
      }
      rec.require(keys.size() == divisors.size(), "duplicate divisors in enumeration");
      if (n > 1) counts << "  ";
      counts << "|Div(Delta_" << n << ")| = " << divisors.size();
    }
    rec.note(counts.str());
  });
}

// Normal-form equality classes coincide with rewrite-reachability classes.
inline SuiteResult word_problem(int strands = 4, int max_len = 6) {
  return detail::run_suite("word problem", [&](detail::Recorder& rec) {
    long words = 0, classes = 0;
    for (int len = 0; len <= max_len; ++len) {
      std::vector<BraidWord> all;
      detail::for_each_word(strands, len, [&](const BraidWord& w) { all.push_back(w); });
      std::map<std::vector<int>, std::size_t> index;
      for (std::size_t i = 0; i < all.size(); ++i) index[all[i].letters] = i;
      detail::UnionFind uf(all.size());
      for (std::size_t i = 0; i < all.size(); ++i) {
        std::vector<int> ls = all[i].letters;
        for (std::size_t t = 0; t + 1 < ls.size(); ++t) {
          if (std::abs(ls[t] - ls[t + 1]) >= 2) {
            std::swap(ls[t], ls[t + 1]);
            uf.unite(i, index.at(ls));
            std::swap(ls[t], ls[t + 1]);
          }
        }
        for (std::size_t t = 0; t + 2 < ls.size(); ++t) {
          if (ls[t] == ls[t + 2] && std::abs(ls[t] - ls[t + 1]) == 1) {
            std::swap(ls[t], ls[t + 1]);
            ls[t + 2] = ls[t];
            uf.unite(i, index.at(ls));
            ls[t + 2] = ls[t + 1];
            std::swap(ls[t], ls[t + 1]);
          }
        }
      }
      std::map<std::size_t, std::string> root_key;
      std::map<std::string, std::size_t> key_root;
      for (std::size_t i = 0; i < all.size(); ++i) {
        const std::size_t root = uf.find(i);
        const std::string key = normal_form(all[i]).key();
        auto [it, fresh] = root_key.emplace(root, key);
        rec.require(it->second == key, "rewrite class split by normal form: " + to_text(all[i]));
        auto [jt, fresh2] = key_root.emplace(key, root);
        rec.require(jt->second == root, "normal form merged rewrite classes: " + to_text(all[i]));
        ++words;
      }
      classes += static_cast<long>(root_key.size());
    }
    rec.note(std::to_string(words) + " words in " + std::to_string(classes) + " classes");
  });
}

// The four simplicity notions agree on every square-free braid.
inline SuiteResult simplicity_equivalence(int max_n = 5, int markov_extra = 2) {
  return detail::run_suite("simplicity equivalence", [&](detail::Recorder& rec) {
    MarkovVerdictCache cache;
    std::ostringstream counts;
    for (int n = 1; n <= max_n; ++n) {
      DInvariant dcalc;
      long simple = 0, total = 0;
      for (const auto& d : enumerate_divisors(n)) {
        BraidWord w = d.canonical_word();
        const bool literal = is_literally_simple(w);
        const bool conjugate = is_conjugate_simple(w);
        const bool geometric = is_geometrically_simple(w, &dcalc);
        const bool markov = is_markov_simple_bounded(w, markov_extra, {}, &cache);
        rec.require(literal == conjugate, "conjugate test disagrees on " + to_text(w));
        rec.require(literal == geometric, "closure test disagrees on " + to_text(w));
        rec.require(literal == markov, "Markov test disagrees on " + to_text(w));
        simple += literal ? 1 : 0;
        ++total;
        if (rec.failed()) return;
      }
      if (n > 1) counts << "  ";
      counts << "n=" << n << ": " << simple << "/" << total << " simple";
    }
    rec.note(counts.str());
  });
}

// Worked examples with pinned results.
inline SuiteResult worked_examples() {
  return detail::run_suite("worked examples", [&](detail::Recorder& rec) {
    BraidWord sq = parse_word("x2 x1 x3 x2 x1 x3", 4);
    rec.require(is_square_free(sq), "expected a square-free braid");

    BraidWord nsq = parse_word("x3 x2 x1 x3 x2 x1", 4);
    NormalForm nf = normal_form(nsq);
    rec.require(!nf.is_square_free() && nf.factors().size() >= 2,
                "expected at least two factors");
    BraidWord shown = parse_word("x2 x1 x3 x2 x1 x1", 4);
    rec.require(braid_equal(nsq, shown), "rewritten form is not equal");
    auto witness = find_square_conjugate(nsq);
    rec.require(witness.has_value() && witness->conjugator.empty(),
                "expected a witness without conjugation");
    rec.require(witness.has_value() && witness->word == shown,
                "witness word is not the pinned one");

    BraidWord half_twist = parse_word("x1 x2 x1", 3);
    rec.require(is_square_free(half_twist), "expected square-free");
    rec.require(!is_literally_simple(half_twist), "expected a repeated letter");
    rec.require(!is_conjugate_simple(half_twist), "expected a non-simple conjugate");
    auto orbit = positive_conjugacy_orbit(half_twist);
    const std::string target = normal_form(parse_word("x1 x1 x2", 3)).key();
    bool found = false;
    for (const auto& m : orbit.members) found = found || m.key() == target;
    rec.require(found, "orbit misses the expected member");
    rec.note("3 worked examples hold");
  });
}

// Cycle decompositions rebuild the braid and are structurally unique.
inline SuiteResult cycle_roundtrip(int max_n = 7) {
  return detail::run_suite("cycle decomposition", [&](detail::Recorder& rec) {
    long checked = 0;
    for (int n = 1; n <= max_n; ++n) {
      for (const auto& w : detail::literally_simple_words(n)) {
        CycleDecomposition d = cycle_decomposition(w);
        BraidWord rebuilt = cycles_to_braid(d);
        rec.require(braid_equal(rebuilt, w), "rebuild differs for " + to_text(w));
        rec.require(cycle_decomposition(rebuilt) == d,
                    "decomposition not stable for " + to_text(w));
        auto blocks = support_components(w);
        rec.require(blocks.size() == d.cycles.size(), "cycle count differs from support");
        for (std::size_t c = 0; c < d.cycles.size(); ++c)
          rec.require(c < blocks.size() && blocks[c].first == d.cycles[c].lo() &&
                          blocks[c].second == d.cycles[c].hi(),
                      "cycle support mismatch for " + to_text(w));
        ++checked;
        if (rec.failed()) return;
      }
    }
    rec.note(std::to_string(checked) + " simple braids round-tripped");
  });
}

// The structural initial set equals the one read from the normal form.
inline SuiteResult initial_sets(int max_n = 7) {
  return detail::run_suite("initial sets", [&](detail::Recorder& rec) {
    long checked = 0;
    for (int n = 1; n <= max_n; ++n) {
      for (const auto& w : detail::literally_simple_words(n)) {
        rec.require(cycle_initial_set(cycle_decomposition(w)) == initial_set(w),
                    "initial set mismatch for " + to_text(w));
        ++checked;
        if (rec.failed()) return;
      }
    }
    BraidWord wide = parse_word("x2 x3 x4  x6 x5  x9 x8 x7  x10 x11  x13 x14  x17 x16 x15", 18);
    const std::vector<int> expected = {2, 6, 9, 13, 17};
    rec.require(cycle_initial_set(cycle_decomposition(wide)) == expected,
                "18-strand example initial set differs");
    rec.require(initial_set(wide) == expected, "18-strand normal form initial set differs");
    rec.note(std::to_string(checked) + " simple braids + the 18-strand example");
  });
}

// Simple braids are conjugate exactly when their strand-partition types
// agree, and each is reachable from the type's canonical word.
inline SuiteResult conjugacy_classification(int max_n = 5) {
  return detail::run_suite("conjugacy classes", [&](detail::Recorder& rec) {
    long types_checked = 0;
    for (int n = 1; n <= max_n; ++n) {
      std::map<std::string, std::set<std::string>> keys_by_type;
      std::map<std::string, ConjugacyType> type_by_text;
      for (const auto& w : detail::literally_simple_words(n)) {
        ConjugacyType t = conjugacy_type(w);
        keys_by_type[t.to_string()].insert(normal_form(w).key());
        type_by_text.emplace(t.to_string(), t);
      }
      for (const auto& [text, keys] : keys_by_type) {
        const ConjugacyType& t = type_by_text.at(text);
        BraidWord beta = canonical_conjugacy_word(t);
        rec.require(conjugacy_type(beta).to_string() == text,
                    "canonical word has the wrong type: " + text);
        auto orbit = positive_conjugacy_orbit(beta);
        rec.require(orbit.complete && orbit.all_square_free,
                    "orbit of canonical word not square-free: " + text);
        std::set<std::string> member_keys;
        for (const auto& m : orbit.members) {
          rec.require(is_literally_simple(m.canonical_word()),
                      "conjugate of a simple braid is not simple: " + text);
          member_keys.insert(m.key());
        }
        rec.require(member_keys == keys, "orbit differs from the type class: " + text);
        ++types_checked;
        if (rec.failed()) return;
      }
    }
    rec.note(std::to_string(types_checked) + " conjugacy types classified");
  });
}

// Reduction traces replay and end at the unit braid on one strand per
// closure component.
inline SuiteResult markov_reduction(int max_n = 7, int random_max_n = 10,
                                    int random_count = 100) {
  return detail::run_suite("markov reduction", [&](detail::Recorder& rec) {
    long checked = 0;
    auto check = [&](const BraidWord& w) {
      auto moves = markov_reduce(w);
      BraidWord final_word = replay_moves(w, moves);
      rec.require(final_word.empty(), "reduction did not reach a unit braid: " + to_text(w));
      rec.require(final_word.strands == closure_component_count(w),
                  "strand count differs from component count: " + to_text(w));
      ++checked;
    };
    for (int n = 1; n <= max_n && !rec.failed(); ++n)
      for (const auto& w : detail::literally_simple_words(n)) {
        check(w);
        if (rec.failed()) return;
      }
    std::mt19937 rng(1105);
    for (int t = 0; t < random_count && !rec.failed(); ++t)
      check(detail::random_simple_word(rng, random_max_n));
    rec.note(std::to_string(checked) + " reductions replayed");
  });
}

// The link polynomial: closed two-strand form, unknot and unlink values,
// the full-support dichotomy, move invariance, and the skein identity in
// the orientation consistent with the two-strand closed form.
inline SuiteResult d_battery(int full_support_strands = 4, int full_support_max_len = 8) {
  return detail::run_suite("link polynomial", [&](detail::Recorder& rec) {
    DInvariant calc;
    for (int a = 0; a <= 8; ++a) {
      BraidWord w(2, std::vector<int>(static_cast<std::size_t>(a), 1));
      rec.require(calc.value(w) == d_two_strand(a),
                  "two-strand value differs at exponent " + std::to_string(a));
    }
    rec.require(to_string(d_two_strand(2)) == "-1/2*s^3 + 3/2*s", "printing format changed");
    for (int n = 2; n <= 7; ++n) {
      std::vector<int> ls(static_cast<std::size_t>(n - 1));
      std::iota(ls.begin(), ls.end(), 1);
      rec.require(calc.value(BraidWord(n, ls)) == laurent_one(),
                  "ascending run is not an unknot at " + std::to_string(n));
    }
    for (int n = 1; n <= 6; ++n)
      rec.require(calc.value(unit_braid(n)) == mu().pow(n - 1),
                  "unlink value differs at " + std::to_string(n));

    // Full support forces the dichotomy: length n-1 gives 1, longer words
    // give polynomials with a root at zero.
    for (int n = 2; n <= 6; ++n) {
      std::vector<int> perm(static_cast<std::size_t>(n - 1));
      std::iota(perm.begin(), perm.end(), 1);
      do {
        rec.require(calc.value(BraidWord(n, perm)) == laurent_one(),
                    "length n-1 full-support value differs");
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (rec.failed()) return;
    }
    long swept = 0;
    for (int len = full_support_strands - 1; len <= full_support_max_len; ++len) {
      detail::for_each_word(full_support_strands, len, [&](const BraidWord& w) {
        if (rec.failed()) return;
        if (static_cast<int>(support(w).size()) != full_support_strands - 1) return;
        Laurent v = calc.value(w);
        auto ts = v.terms();
        if (len == full_support_strands - 1)
          rec.require(v == laurent_one(), "short full-support word value differs");
        else
          rec.require(!ts.empty() && ts.back().first >= 1,
                      "full-support polynomial has a term below s^1: " + to_text(w));
        ++swept;
      });
      if (rec.failed()) return;
    }

    std::mt19937 rng(2047);
    for (int t = 0; t < 200; ++t) {
      std::uniform_int_distribution<int> nd(2, 4);
      const int n = nd(rng);
      BraidWord w = detail::random_word(rng, n, 8);
      Laurent base = calc.value(w);
      auto divisors = enumerate_divisors(n);
      std::uniform_int_distribution<std::size_t> dd(0, divisors.size() - 1);
      std::optional<NormalForm> conj;
      for (int tries = 0; tries < 8 && !conj; ++tries)
        conj = conjugate_by(w, divisors[dd(rng)].canonical_word());
      if (!conj) conj = conjugate_by(w, garside_element(n));
      rec.require(calc.value(conj->canonical_word()) == base,
                  "conjugation changed the polynomial: " + to_text(w));
      BraidWord up = w;
      up.strands = n + 1;
      up.letters.push_back(n);
      rec.require(calc.value(up) == base, "stabilization changed the polynomial: " + to_text(w));
      if (rec.failed()) return;
    }

    // Split unions multiply through one mu factor.
    std::mt19937 rng2(4099);
    for (int t = 0; t < 50; ++t) {
      std::uniform_int_distribution<int> nd(2, 3);
      const int a = nd(rng2), b = nd(rng2);
      BraidWord u = detail::random_word(rng2, a, 5);
      BraidWord v = detail::random_word(rng2, b, 5);
      BraidWord joined = concat(BraidWord(a + b, u.letters), shift(v, a, a + b));
      rec.require(calc.value(joined) == mu() * calc.value(u) * calc.value(v),
                  "split value does not factor: " + to_text(joined));
      if (rec.failed()) return;
    }

    for (int a = 1; a <= 7; ++a) {
      Laurent lhs = d_two_strand(a - 1).shifted(1) + d_two_strand(a + 1).shifted(-1);
      rec.require(lhs == make_rational(2) * d_two_strand(a),
                  "skein identity fails at exponent " + std::to_string(a));
    }
    rec.note(std::to_string(swept) + " full-support words swept");
  });
}

// The gcd/lcm case tables hold as word identities and each table entry is
// the least common multiple found by exhaustive search.
inline SuiteResult lcm_identities(int max_n = 7) {
  return detail::run_suite("lcm identities", [&](detail::Recorder& rec) {
    long instances = 0;
    auto generator = [](int i, int n) { return BraidWord(n, {i}); };
    auto check_formula = [&](int i, const VerySimpleFactor& f, int n) {
      BraidWord fw = left_lcm_formula(i, f, n);
      BraidWord gi = generator(i, n);
      BraidWord fword = factor_word(f, n);
      rec.require(left_divides(gi, fw) && left_divides(fword, fw),
                  "formula is not a common multiple: " + f.to_string());
      auto brute = brute_force_left_lcm(gi, fword, fw.degree());
      rec.require(brute.lcm.has_value() && braid_equal(*brute.lcm, fw),
                  "formula is not least: x" + std::to_string(i) + " vs " + f.to_string());
      ++instances;
    };

    for (int n = 3; n <= max_n && !rec.failed(); ++n) {
      // two generators
      for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
          if (i == j) continue;
          BraidWord lhs = parse_word("x" + std::to_string(i) + " x" + std::to_string(j), n);
          BraidWord rhs = parse_word("x" + std::to_string(j) + " x" + std::to_string(i), n);
          if (std::abs(i - j) >= 2) {
            rec.require(braid_equal(lhs, rhs), "commutation fails");
            auto brute = brute_force_left_lcm(BraidWord(n, {i}), BraidWord(n, {j}), 2);
            rec.require(brute.lcm && braid_equal(*brute.lcm, lhs), "two-letter lcm differs");
          } else if (j == i + 1) {
            BraidWord braid_lhs = BraidWord(n, {i, j, i});
            rec.require(braid_equal(braid_lhs, BraidWord(n, {j, i, j})), "braid relation fails");
            auto brute = brute_force_left_lcm(BraidWord(n, {i}), BraidWord(n, {j}), 3);
            rec.require(brute.lcm && braid_equal(*brute.lcm, braid_lhs),
                        "adjacent-letter lcm differs");
          }
          ++instances;
        }
      // length-two divisors against a neighbouring generator
      for (int i = 1; i + 2 < n; ++i) {
        const int j = i + 1, k = i + 2;
        auto word = [&](std::vector<int> ls) { return BraidWord(n, std::move(ls)); };
        rec.require(braid_equal(word({i, j, k, j}), word({k, i, j, k})), "case a identity");
        auto ba = brute_force_left_lcm(word({i, j}), word({k}), 4);
        rec.require(ba.lcm && braid_equal(*ba.lcm, word({i, j, k, j})), "case a lcm");
        rec.require(braid_equal(word({i, j, i, k, j}), word({j, k, i, j, k})), "case b identity");
        auto bb = brute_force_left_lcm(word({j, k}), word({i}), 5);
        rec.require(bb.lcm && braid_equal(*bb.lcm, word({i, j, i, k, j})), "case b lcm");
        rec.require(braid_equal(word({i, k, j, i}), word({k, j, i, j})), "case c identity");
        auto bc = brute_force_left_lcm(word({k, j}), word({i}), 4);
        rec.require(bc.lcm && braid_equal(*bc.lcm, word({i, k, j, i})), "case c lcm");
        rec.require(braid_equal(word({j, i, k, j, i}), word({k, j, i, k, j})), "case d identity");
        auto bd = brute_force_left_lcm(word({j, i}), word({k}), 5);
        rec.require(bd.lcm && braid_equal(*bd.lcm, word({j, i, k, j, i})), "case d lcm");
        instances += 4;
      }
      if (rec.failed()) return;

      // ascending runs against every generator
      for (int a = 1; a < n; ++a)
        for (int b = a; b < n && !rec.failed(); ++b) {
          VerySimpleFactor u = VerySimpleFactor::ascending(a, b);
          BraidWord uw = factor_word(u, n);
          for (int i = 1; i < n; ++i) check_formula(i, u, n);
          if (a < b) {
            if (a >= 2) {
              std::vector<int> rhs = uw.letters;
              for (int x = a - 1; x <= b; ++x) rhs.push_back(x);
              rec.require(braid_equal(left_lcm_formula(a - 1, u, n), BraidWord(n, rhs)),
                          "low-extension identity");
            }
            for (int i = a + 1; i <= b; ++i) {
              BraidWord lhs = concat(uw, BraidWord(n, {i - 1}));
              BraidWord rhs = concat(BraidWord(n, {i}), uw);
              rec.require(braid_equal(lhs, rhs), "pass-through identity");
            }
            if (b + 1 < n) {
              BraidWord lhs = concat(uw, BraidWord(n, {b + 1, b}));
              BraidWord rhs =
                  concat(BraidWord(n, {b + 1}),
                         factor_word(VerySimpleFactor::ascending(a, b + 1), n));
              rec.require(braid_equal(lhs, rhs), "high-extension identity");
            }
          }
        }
      // descending runs against every generator
      for (int c = 2; c < n; ++c)
        for (int d = 1; d < c && !rec.failed(); ++d) {
          VerySimpleFactor f = VerySimpleFactor::descending(c, d);
          BraidWord dw = factor_word(f, n);
          for (int i = 1; i < n; ++i) check_formula(i, f, n);
          if (d >= 2) {
            BraidWord lhs = concat(BraidWord(n, {d - 1}),
                                   factor_word(VerySimpleFactor::descending(c, d - 1), n));
            BraidWord rhs = concat(dw, BraidWord(n, {d - 1, d}));
            rec.require(braid_equal(lhs, rhs), "low-extension identity (descending)");
          }
          for (int i = d; i <= c - 1; ++i) {
            BraidWord lhs = concat(BraidWord(n, {i}), dw);
            BraidWord rhs = concat(dw, BraidWord(n, {i + 1}));
            rec.require(braid_equal(lhs, rhs), "pass-through identity (descending)");
          }
          if (c + 1 < n) {
            BraidWord lhs = concat(dw, factor_word(VerySimpleFactor::descending(c + 1, d), n));
            BraidWord rhs = concat(
                BraidWord(n, {c + 1}),
                concat(dw, factor_word(VerySimpleFactor::descending(c + 1, d + 1), n)));
            rec.require(braid_equal(lhs, rhs), "high-extension identity (descending)");
          }
        }
    }

    // A generator just outside a cycle's support divides a product only if
    // it divides the cofactor.
    for (int n = 3; n <= std::min(max_n, 5); ++n) {
      std::vector<BraidWord> cofactors;
      for (const auto& d : enumerate_divisors(n)) cofactors.push_back(d.canonical_word());
      if (n == 4)
        for (int len = 1; len <= 4; ++len)
          detail::for_each_word(n, len, [&](const BraidWord& w) { cofactors.push_back(w); });
      for (const auto& g : detail::literally_simple_words(n)) {
        CycleDecomposition dec = cycle_decomposition(g);
        if (dec.cycles.size() != 1) continue;
        const int lo = dec.cycles[0].lo(), hi = dec.cycles[0].hi();
        for (int i : {lo - 1, hi + 1}) {
          if (i < 1 || i >= n) continue;
          for (const auto& beta : cofactors) {
            NormalForm product = normal_form(concat(g, beta));
            if (product.letter_divides_left(i)) {
              rec.require(normal_form(beta).letter_divides_left(i),
                          "outside divisor does not pass: " + to_text(g));
              ++instances;
            }
          }
          if (rec.failed()) return;
        }
      }
    }
    rec.note(std::to_string(instances) + " table instances checked");
  });
}

struct VerifyOptions {
  int max_strands = 5;
};

// The bounded suite battery used by the command-line front end.
inline std::vector<SuiteResult> run_all(const VerifyOptions& opts) {
  const int k = opts.max_strands;
  std::vector<SuiteResult> out;
  out.push_back(divisor_census(std::min(k, 6)));
  out.push_back(word_problem(std::min(k, 4), 6));
  out.push_back(simplicity_equivalence(std::min(k, 5)));
  if (k >= 4)
    out.push_back(worked_examples());
  else {
    detail::Recorder rec("worked examples");
    out.push_back(rec.skip("requires at least 4 strands"));
  }
  out.push_back(cycle_roundtrip(std::min(k, 7)));
  out.push_back(initial_sets(std::min(k, 7)));
  out.push_back(conjugacy_classification(std::min(k, 5)));
  out.push_back(markov_reduction(std::min(k, 7)));
  out.push_back(d_battery());
  out.push_back(lcm_identities(std::min(k, 7)));
  return out;
}

}  // namespace braids::verify
