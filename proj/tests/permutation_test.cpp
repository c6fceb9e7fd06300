#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "braids/permutation.hpp"

using namespace braids;

namespace {

// Inversion count straight from the definition.
int inversion_oracle(const Permutation& p) {
  int count = 0;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (p.image(i) > p.image(j)) ++count;
  return count;
}

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

TEST_CASE("letters act left to right on strand start positions", "[permutation]") {
  Permutation p = word_to_permutation(BraidWord(4, {1, 2, 3}));
  REQUIRE(p.images() == std::vector<int>{4, 1, 2, 3});
  REQUIRE(word_to_permutation(BraidWord(4, {1, 1})).images() == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("word map is a homomorphism", "[permutation]") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> xd(1, 4);
  for (int t = 0; t < 50; ++t) {
    std::vector<int> u(6), v(5);
    for (int& x : u) x = xd(rng);
    for (int& x : v) x = xd(rng);
    BraidWord wu(5, u), wv(5, v);
    Permutation pu = word_to_permutation(wu);
    Permutation pv = word_to_permutation(wv);
    Permutation puv = word_to_permutation(concat(wu, wv));
    for (int i = 1; i <= 5; ++i) REQUIRE(puv.image(i) == pv.image(pu.image(i)));
  }
}

TEST_CASE("reversal inverts the permutation", "[permutation]") {
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> xd(1, 4);
  for (int t = 0; t < 50; ++t) {
    std::vector<int> ls(7);
    for (int& x : ls) x = xd(rng);
    BraidWord w(5, ls);
    REQUIRE(word_to_permutation(reverse_word(w)) == word_to_permutation(w).inverse());
  }
}

TEST_CASE("descents inversions cycles", "[permutation]") {
  Permutation p({4, 1, 2, 3});
  REQUIRE(p.descents() == std::vector<int>{1});
  REQUIRE(p.inversions() == 3);
  REQUIRE(p.cycles() == std::vector<std::vector<int>>{{1, 4, 3, 2}});
  Permutation q({2, 1, 4, 3});
  REQUIRE(q.descents() == std::vector<int>{1, 3});
  REQUIRE(q.cycles() == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
  for (const auto& r : symmetric_group(5)) REQUIRE(r.inversions() == inversion_oracle(r));
}

TEST_CASE("permutation words are reduced and round-trip", "[permutation]") {
  for (const auto& p : symmetric_group(5)) {
    BraidWord w = permutation_braid_word(p);
    REQUIRE(w.degree() == p.inversions());
    REQUIRE(word_to_permutation(w) == p);
    REQUIRE(p.inverse().inverse() == p);
  }
}
