#include <catch2/catch_amalgamated.hpp>

#include "braids/closure.hpp"
#include "braids/laurent.hpp"

using namespace braids;

TEST_CASE("laurent arithmetic", "[laurent]") {
  Laurent p = Laurent::monomial(make_rational(3, 2), 2) + Laurent::monomial(make_rational(-1), 0);
  REQUIRE(p.coefficient(2) == make_rational(3, 2));
  REQUIRE(p.coefficient(0) == make_rational(-1));
  REQUIRE(p.coefficient(5) == make_rational(0));
  REQUIRE((p - p).is_zero());
  Laurent q = Laurent::monomial(make_rational(2), -1);
  REQUIRE((p * q).coefficient(1) == make_rational(3));
  REQUIRE(p.shifted(3).coefficient(5) == make_rational(3, 2));
  REQUIRE(make_rational(1, 2) * q == Laurent::monomial(make_rational(1), -1));
  REQUIRE(mu().pow(2) == make_rational(1, 4) * (Laurent::monomial(make_rational(1), 2) +
                                                Laurent::monomial(make_rational(2), 0) +
                                                Laurent::monomial(make_rational(1), -2)));
  REQUIRE(laurent_one().pow(0) == laurent_one());
}

TEST_CASE("laurent printing", "[laurent]") {
  REQUIRE(to_string(Laurent()) == "0");
  REQUIRE(to_string(laurent_one()) == "1");
  REQUIRE(to_string(mu()) == "1/2*s + 1/2*s^-1");
  Laurent p = Laurent::monomial(make_rational(-1, 2), 3) + Laurent::monomial(make_rational(3, 2), 1);
  REQUIRE(to_string(p) == "-1/2*s^3 + 3/2*s");
  REQUIRE(to_string(Laurent::monomial(make_rational(1), 1)) == "s");
  REQUIRE(to_string(Laurent::monomial(make_rational(-1), -2) + laurent_one()) == "1 - s^-2");
}

TEST_CASE("closure components follow the permutation", "[closure]") {
  BraidWord trefoil = parse_word("x1 x1 x1", 2);
  REQUIRE(closure_component_count(trefoil) == 1);
  REQUIRE(closure_component_count(parse_word("x1 x1", 2)) == 2);
  REQUIRE(closure_component_count(unit_braid(4)) == 4);
  REQUIRE(closure_components(parse_word("x1 x2", 3)) ==
          std::vector<std::vector<int>>{{1, 3, 2}});
  auto labels = closure_component_labels(parse_word("x1 x1", 2));
  REQUIRE(labels[1] == 0);
  REQUIRE(labels[2] == 1);
}

TEST_CASE("crossing and linking matrices", "[closure]") {
  BraidWord hopf = parse_word("x1 x1", 2);
  auto cm = crossing_matrix(hopf);
  REQUIRE(cm == std::vector<std::vector<int>>{{0, 2}, {2, 0}});
  auto lm = linking_matrix(hopf);
  REQUIRE(lm[0][1] == make_rational(1));
  REQUIRE(inter_component_crossings(hopf) == 2);

  BraidWord trefoil = parse_word("x1 x1 x1", 2);
  REQUIRE(crossing_matrix(trefoil) == std::vector<std::vector<int>>{{3}});
  REQUIRE(inter_component_crossings(trefoil) == 0);

  // x1 x3 x3 on 5 strands: x1 crosses a component with itself, the two x3
  // crossings tie two single-strand components together.
  BraidWord w = parse_word("x1 x3 x3", 5);
  REQUIRE(closure_component_count(w) == 4);
  REQUIRE(inter_component_crossings(w) == 2);
  REQUIRE(crossing_matrix(w)[0][0] == 1);
}

TEST_CASE("support splitting", "[closure]") {
  BraidWord w = parse_word("x1 x4 x5 x4", 8);
  SplitParts parts = split_support(w);
  REQUIRE(parts.groups.size() == 2);
  REQUIRE(parts.groups[0] == parse_word("x1", 2));
  REQUIRE(parts.groups[1] == BraidWord(3, {1, 2, 1}));
  REQUIRE(parts.trivial_strands == 3);
  REQUIRE(parts.part_count() == 5);

  SplitParts unit = split_support(unit_braid(3));
  REQUIRE(unit.groups.empty());
  REQUIRE(unit.trivial_strands == 3);
}

TEST_CASE("single-use top strands destabilize", "[closure]") {
  auto d = destabilize_once(parse_word("x1 x2 x1", 3));
  REQUIRE(d.has_value());
  REQUIRE(*d == BraidWord(2, {1, 1}));
  REQUIRE(!destabilize_once(parse_word("x2 x1 x2", 3)).has_value());
  REQUIRE(!destabilize_once(unit_braid(1)).has_value());
  auto lone = destabilize_once(parse_word("x1", 2));
  REQUIRE(lone.has_value());
  REQUIRE(lone->strands == 1);
  REQUIRE(lone->empty());
  auto top_last = destabilize_once(parse_word("x1 x2", 3));
  REQUIRE(top_last.has_value());
  REQUIRE(*top_last == BraidWord(2, {1}));
}
