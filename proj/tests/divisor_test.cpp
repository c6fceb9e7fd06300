#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "braids/divisors.hpp"

using namespace braids;

namespace {

// Smallest word for a permutation in (length, lexicographic) order, found
// by leafing through every word of the reduced length.  Small n only.
std::vector<int> minimal_word_oracle(const Permutation& p) {
  const int n = p.size();
  const int len = p.inversions();
  std::vector<int> ls(static_cast<std::size_t>(len), 1);
  for (;;) {
    if (word_to_permutation(BraidWord(n, ls)) == p) return ls;
    int pos = len - 1;
    while (pos >= 0 && ls[static_cast<std::size_t>(pos)] == n - 1)
      ls[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) throw std::logic_error("no reduced word found");
    ++ls[static_cast<std::size_t>(pos)];
  }
}

}  // namespace

TEST_CASE("divisor enumeration counts factorials", "[divisor]") {
  long expect = 1;
  for (int n = 1; n <= 5; ++n) {
    expect *= n;
    auto ds = enumerate_divisors(n);
    REQUIRE(static_cast<long>(ds.size()) == expect);
    auto rank = [](const NormalForm& d) {
      BraidWord w = d.canonical_word();
      return std::make_pair(w.degree(), w.letters);
    };
    REQUIRE(std::is_sorted(ds.begin(), ds.end(), [&](const NormalForm& a, const NormalForm& b) {
      return rank(a) < rank(b);
    }));
    for (const auto& d : ds) {
      REQUIRE(d.is_square_free());
      REQUIRE(left_divides(d.canonical_word(), garside_element(n)));
    }
  }
  REQUIRE_THROWS_AS(enumerate_divisors(0), std::invalid_argument);
  REQUIRE_THROWS_AS(enumerate_divisors(8), std::invalid_argument);
}

TEST_CASE("divisor words are the minimal reduced words", "[divisor]") {
  std::vector<int> img{1, 2, 3, 4};
  do {
    Permutation p(img);
    BraidWord w = permutation_to_divisor(p);
    REQUIRE(w.letters == minimal_word_oracle(p));
    REQUIRE(word_to_permutation(w) == p);
  } while (std::next_permutation(img.begin(), img.end()));
}

TEST_CASE("block form descends within blocks and rises across", "[divisor]") {
  for (const auto& d : enumerate_divisors(5)) {
    DivisorForm form = divisor_form_of(d.permutation());
    int prev_hi = 0;
    std::vector<int> letters;
    for (const auto& [k, j] : form.blocks) {
      REQUIRE(j <= k);
      REQUIRE(k > prev_hi);
      prev_hi = k;
      for (int x = k; x >= j; --x) letters.push_back(x);
    }
    REQUIRE(form.word.letters == letters);
    REQUIRE(braid_equal(form.word, d.canonical_word()));
  }
}

TEST_CASE("block form of known braids", "[divisor]") {
  DivisorForm half_twist = divisor_canonical_form(garside_element(4));
  REQUIRE(half_twist.blocks ==
          std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 1}});
  DivisorForm asc = divisor_canonical_form(parse_word("x1 x2 x3", 4));
  REQUIRE(asc.blocks == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}});
  REQUIRE_THROWS_AS(divisor_canonical_form(parse_word("x1 x1", 3)), std::invalid_argument);
}
