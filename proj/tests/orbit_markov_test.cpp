#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "braids/closure.hpp"
#include "braids/divisors.hpp"
#include "braids/markov.hpp"
#include "braids/orbit.hpp"
#include "braids/simple.hpp"

using namespace braids;

namespace {

bool has_repeat(const BraidWord& w) {
  for (std::size_t t = 0; t + 1 < w.letters.size(); ++t)
    if (w.letters[t] == w.letters[t + 1]) return true;
  return false;
}

}  // namespace

TEST_CASE("positive conjugation keeps degree and strand count", "[orbit]") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> xd(1, 3);
  for (int t = 0; t < 50; ++t) {
    std::vector<int> ls(static_cast<std::size_t>(t % 7));
    for (int& x : ls) x = xd(rng);
    BraidWord w(4, ls);
    auto orbit = positive_conjugacy_orbit(w);
    REQUIRE(orbit.complete);
    std::set<std::string> keys;
    for (const auto& m : orbit.members) {
      REQUIRE(m.strands() == 4);
      REQUIRE(m.degree() == w.degree());
      keys.insert(m.key());
    }
    REQUIRE(keys.size() == orbit.members.size());
    REQUIRE(keys.count(normal_form(w).key()) == 1);
  }
}

TEST_CASE("orbit of the three-strand half twist", "[orbit]") {
  auto orbit = positive_conjugacy_orbit(parse_word("x1 x2 x1", 3));
  REQUIRE(orbit.complete);
  REQUIRE(orbit.members.size() == 5);
  REQUIRE(!orbit.all_square_free);
  REQUIRE(orbit.witness.has_value());
  REQUIRE(to_text(orbit.witness->word) == "x1 x1 x2");
  std::set<std::string> keys;
  for (const auto& m : orbit.members) keys.insert(m.key());
  REQUIRE(keys.count(normal_form(parse_word("x1 x1 x2", 3)).key()) == 1);
  // the witness chain is a legal positive conjugation
  REQUIRE(multiply(parse_word("x1 x2 x1", 3), orbit.witness->conjugator) ==
          multiply(orbit.witness->conjugator, orbit.witness->word));
}

TEST_CASE("square conjugate pins", "[orbit]") {
  BraidWord delta = garside_element(4);
  auto sc = find_square_conjugate(delta);
  REQUIRE(sc.has_value());
  REQUIRE(to_text(sc->conjugator) == "x1");
  REQUIRE(to_text(sc->word) == "x2 x1 x3 x2 x1 x1");
  REQUIRE(multiply(delta, sc->conjugator) == multiply(sc->conjugator, sc->word));

  auto already = find_square_conjugate(parse_word("x3 x2 x1 x3 x2 x1", 4));
  REQUIRE(already.has_value());
  REQUIRE(already->conjugator.empty());
  REQUIRE(to_text(already->word) == "x2 x1 x3 x2 x1 x1");

  auto half = find_square_conjugate(parse_word("x1 x2 x1", 3));
  REQUIRE(half.has_value());
  REQUIRE(to_text(half->conjugator) == "x1");
  REQUIRE(to_text(half->word) == "x2 x1 x1");

  REQUIRE(!find_square_conjugate(parse_word("x1 x3", 4)).has_value());
  REQUIRE(!find_square_conjugate(unit_braid(2)).has_value());
}

TEST_CASE("square conjugates exhibit a repeat", "[orbit]") {
  std::mt19937 rng(32);
  std::uniform_int_distribution<int> xd(1, 3);
  int found = 0;
  for (int t = 0; t < 60; ++t) {
    std::vector<int> ls(static_cast<std::size_t>(t % 8));
    for (int& x : ls) x = xd(rng);
    BraidWord w(4, ls);
    auto sc = find_square_conjugate(w);
    if (!sc) {
      REQUIRE(is_literally_simple(w));
      continue;
    }
    ++found;
    REQUIRE(has_repeat(sc->word));
    REQUIRE(!is_square_free(sc->word));
    REQUIRE(multiply(w, sc->conjugator) == multiply(sc->conjugator, sc->word));
  }
  REQUIRE(found > 10);
}

TEST_CASE("conjugacy decisions", "[orbit]") {
  REQUIRE(are_conjugate(parse_word("x1 x2", 3), parse_word("x2 x1", 3)));
  REQUIRE(are_conjugate(parse_word("x1 x2 x1", 3), parse_word("x1 x1 x2", 3)));
  REQUIRE(!are_conjugate(parse_word("x1 x2", 3), parse_word("x1", 3)));
  REQUIRE(are_conjugate(parse_word("x1 x1", 3), parse_word("x2 x2", 3)));
  REQUIRE(!are_conjugate(parse_word("x1 x1", 3), parse_word("x1 x2", 3)));
  REQUIRE(are_conjugate(parse_word("x1", 4), parse_word("x3", 4)));
  REQUIRE_THROWS_AS(are_conjugate(parse_word("x1", 3), parse_word("x1", 4)),
                    std::invalid_argument);
}

TEST_CASE("search bounds are reported, not silently wrong", "[orbit]") {
  OrbitOptions tiny;
  tiny.max_size = 1;
  auto orbit = positive_conjugacy_orbit(parse_word("x1 x2", 3), tiny);
  REQUIRE(!orbit.complete);
  REQUIRE_THROWS_AS(is_conjugate_simple(parse_word("x1 x2", 3), tiny), BoundExceeded);
}

TEST_CASE("bounded markov simplicity", "[markov]") {
  MarkovVerdictCache cache;
  REQUIRE(is_markov_simple_bounded(parse_word("x1 x3", 4), 2, {}, &cache));
  REQUIRE(is_markov_simple_bounded(parse_word("x2 x1 x3", 4), 2, {}, &cache));
  REQUIRE(!is_markov_simple_bounded(parse_word("x1 x2 x1", 3), 2, {}, &cache));
  REQUIRE(!is_markov_simple_bounded(parse_word("x2 x1 x3 x2 x1 x3", 4), 2, {}, &cache));
  REQUIRE(!cache.verdicts.empty());
  REQUIRE(is_markov_simple_bounded(unit_braid(5), 2, {}, &cache));
  REQUIRE_THROWS_AS(is_markov_simple_bounded(parse_word("x1", 6), 2), std::invalid_argument);
}

TEST_CASE("reduction traces replay to the unit braid", "[markov]") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& d : enumerate_divisors(n)) {
      BraidWord w = d.canonical_word();
      if (!is_literally_simple(w)) continue;
      auto moves = markov_reduce(w);
      BraidWord end = replay_moves(w, moves);
      REQUIRE(end.empty());
      REQUIRE(end.strands == closure_component_count(w));
    }
  REQUIRE_THROWS_AS(markov_reduce(parse_word("x1 x2 x1", 3)), std::invalid_argument);
}

TEST_CASE("replay validates moves", "[markov]") {
  BraidWord w = parse_word("x1", 3);
  std::vector<MarkovMove> bad{{MoveKind::DestabilizeMII, std::nullopt, 3, 2}};
  REQUIRE_THROWS_AS(replay_moves(w, bad), ReplayError);
  std::vector<MarkovMove> wrong_strands{{MoveKind::ConjugationMI, BraidWord(4, {1}), 4, 4}};
  REQUIRE_THROWS_AS(replay_moves(w, wrong_strands), ReplayError);
  std::vector<MarkovMove> ok{{MoveKind::StabilizeMII, std::nullopt, 3, 4},
                             {MoveKind::ConjugationMI, BraidWord(4, {1}), 4, 4},
                             {MoveKind::DestabilizeMII, std::nullopt, 4, 3}};
  REQUIRE(braid_equal(replay_moves(w, ok), parse_word("x1", 3)));
}

TEST_CASE("destabilization needs a lone top letter", "[markov]") {
  REQUIRE(destabilized(normal_form(parse_word("x1 x2", 3))).has_value());
  REQUIRE(!destabilized(normal_form(parse_word("x2 x1 x2", 3))).has_value());
  REQUIRE(!destabilized(normal_form(parse_word("x1", 3))).has_value());
  auto down = destabilized(normal_form(parse_word("x1 x2", 3)));
  REQUIRE(down->strands() == 2);
  REQUIRE(to_text(down->canonical_word()) == "x1");
}
