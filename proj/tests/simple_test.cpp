#include <catch2/catch_amalgamated.hpp>

#include "braids/divisors.hpp"
#include "braids/normal_form.hpp"
#include "braids/simple.hpp"

using namespace braids;

namespace {

// Independent count of braids with no repeated letter, built from the shape
// of their decompositions rather than from braid arithmetic.  A single
// support interval of m letters carries a sequence of ascending/descending
// runs: descending runs take at least two letters, ascending runs never
// follow each other.  f(m) counts such sequences; g(L) sums f over sets of
// intervals in 1..L separated by gaps.
long run_sequences(int m) {
  std::vector<long> u(static_cast<std::size_t>(m) + 1, 0);
  std::vector<long> d(static_cast<std::size_t>(m) + 1, 0);
  for (int t = 1; t <= m; ++t) {
    u[t] = 1;  // one run covering everything
    for (int k = 1; k < t; ++k) u[t] += d[t - k];
    d[t] = t >= 2 ? 1 : 0;
    for (int k = 2; k < t; ++k) d[t] += u[t - k] + d[t - k];
  }
  return m == 0 ? 1 : u[m] + d[m];
}

long simple_count_oracle(int strands) {
  const int L = strands - 1;
  std::vector<long> g(static_cast<std::size_t>(L) + 1, 1);
  for (int t = 1; t <= L; ++t) {
    g[t] = g[t - 1];
    for (int m = 1; m <= t; ++m)
      g[t] += run_sequences(m) * (t - m - 1 >= 0 ? g[t - m - 1] : 1);
  }
  return g[L];
}

long simple_count_filtered(int n) {
  long count = 0;
  for (const auto& d : enumerate_divisors(n))
    if (is_literally_simple(d.canonical_word())) ++count;
  return count;
}

}  // namespace

TEST_CASE("simple braid census", "[simple]") {
  const long expected[] = {1, 2, 5, 13, 34, 89, 233};
  for (int n = 1; n <= 7; ++n) {
    REQUIRE(simple_count_oracle(n) == expected[n - 1]);
    REQUIRE(simple_count_filtered(n) == expected[n - 1]);
  }
}

TEST_CASE("literal simplicity means no repeated letter", "[simple]") {
  REQUIRE(is_literally_simple(unit_braid(4)));
  REQUIRE(is_literally_simple(parse_word("x1 x3", 4)));
  REQUIRE(is_literally_simple(parse_word("x2 x1 x3", 4)));
  REQUIRE(!is_literally_simple(parse_word("x1 x2 x1", 3)));
  REQUIRE(!is_literally_simple(parse_word("x1 x1", 3)));
}

TEST_CASE("cycle decomposition text forms", "[simple]") {
  REQUIRE(cycle_decomposition(parse_word("x2 x1 x3", 5)).to_string() == "[D(2,1) U(3,3)]");
  REQUIRE(cycle_decomposition(parse_word("x2 x1 x3 x4 x6 x7", 9)).to_string() ==
          "[D(2,1) U(3,4)][U(6,7)]");
  REQUIRE(cycle_decomposition(unit_braid(5)).to_string().empty());
  REQUIRE(cycle_decomposition(parse_word("x3", 5)).to_string() == "[U(3,3)]");
}

TEST_CASE("decomposition rebuilds the braid", "[simple]") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& d : enumerate_divisors(n)) {
      BraidWord w = d.canonical_word();
      if (!is_literally_simple(w)) continue;
      CycleDecomposition dec = cycle_decomposition(w);
      REQUIRE(braid_equal(cycles_to_braid(dec), w));
      REQUIRE(cycle_decomposition(cycles_to_braid(dec)) == dec);
    }
  REQUIRE_THROWS_AS(cycle_decomposition(parse_word("x1 x2 x1", 3)), std::invalid_argument);
}

TEST_CASE("cycle validation", "[simple]") {
  Cycle gap{{VerySimpleFactor::ascending(1, 2), VerySimpleFactor::ascending(4, 5)}};
  REQUIRE_THROWS_AS(gap.validate(), std::invalid_argument);
  Cycle twice_up{{VerySimpleFactor::ascending(1, 2), VerySimpleFactor::ascending(3, 4)}};
  REQUIRE_THROWS_AS(twice_up.validate(), std::invalid_argument);
  Cycle ok{{VerySimpleFactor::descending(2, 1), VerySimpleFactor::ascending(3, 4)}};
  ok.validate();
  REQUIRE(ok.strand_span() == 5);
  CycleDecomposition touching{6, {Cycle{{VerySimpleFactor::ascending(1, 2)}},
                                  Cycle{{VerySimpleFactor::ascending(4, 4)}}}};
  touching.validate();
  touching.cycles[1] = Cycle{{VerySimpleFactor::ascending(3, 4)}};
  REQUIRE_THROWS_AS(touching.validate(), std::invalid_argument);
}

TEST_CASE("initial sets from the cycle structure", "[simple]") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& d : enumerate_divisors(n)) {
      BraidWord w = d.canonical_word();
      if (!is_literally_simple(w)) continue;
      REQUIRE(cycle_initial_set(cycle_decomposition(w)) == initial_set(w));
    }
  BraidWord wide =
      parse_word("x2 x3 x4 x6 x5 x9 x8 x7 x10 x11 x13 x14 x17 x16 x15", 18);
  REQUIRE(cycle_initial_set(cycle_decomposition(wide)) == std::vector<int>{2, 6, 9, 13, 17});
}

TEST_CASE("conjugacy type text and canonical word", "[simple]") {
  ConjugacyType t{{4, 3, 2, 2}, 13};
  REQUIRE(t.to_string() == "A=(4,3,2,2); n=13; trivial=2");
  BraidWord beta = canonical_conjugacy_word(t);
  REQUIRE(to_text(beta) == "x1 x2 x3 x5 x6 x8 x10");
  REQUIRE(conjugacy_type(beta) == t);
  REQUIRE(conjugacy_type(unit_braid(3)) == ConjugacyType{{}, 3});
  REQUIRE(conjugacy_type(parse_word("x2 x1 x3", 5)).parts == std::vector<int>{4});
  ConjugacyType bad{{2, 3}, 13};
  REQUIRE_THROWS_AS(bad.validate(), std::invalid_argument);
  ConjugacyType tight{{3, 2}, 4};
  REQUIRE_THROWS_AS(tight.validate(), std::invalid_argument);
}
