#include <doctest.h>

#include <stdexcept>

#include "uiseq/sequence.hpp"

using namespace uiseq;

TEST_CASE("CharacteristicSet stores elements sorted and validates them") {
  const CharacteristicSet s(40, {0, 17, 34, 11, 28, 5});
  CHECK(std::vector<std::int64_t>(s.elements().begin(), s.elements().end()) ==
        std::vector<std::int64_t>{0, 5, 11, 17, 28, 34});
  CHECK(s.weight() == 6);
  CHECK(s.contains(11));
  CHECK_FALSE(s.contains(12));

  CHECK_THROWS_AS(CharacteristicSet(35, {}), std::invalid_argument);
  CHECK_THROWS_AS(CharacteristicSet(35, {0, 35}), std::invalid_argument);
  CHECK_THROWS_AS(CharacteristicSet(35, {-1}), std::invalid_argument);
  CHECK_THROWS_AS(CharacteristicSet(35, {3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(CharacteristicSet(0, {0}), std::invalid_argument);
  CHECK(CharacteristicSet::from_residues(35, {-1, 36}) == CharacteristicSet(35, {1, 34}));
}

TEST_CASE("weight of the worked examples") {
  CHECK(weight(CharacteristicSet(35, {0, 10, 15, 25, 30})) == 5);
  CHECK(weight(CharacteristicSet(77, {0, 56, 35, 14, 70, 49, 28})) == 7);
}

TEST_CASE("shift") {
  const CharacteristicSet i3(35, {0, 8, 16, 24, 32});
  const CharacteristicSet i4(35, {0, 6, 12, 18, 24});
  CHECK(shift(i3, 0) == i3);
  CHECK(shift(i4, 8) == CharacteristicSet(35, {8, 14, 20, 26, 32}));
  CHECK(shift(i3, 35) == i3);
  CHECK(shift(i3, -35) == i3);
  CHECK(shift(i3, 3) == CharacteristicSet(35, {0, 3, 11, 19, 27}));
}

TEST_CASE("shift is a group action of Z_L") {
  const CharacteristicSet s(23, {0, 1, 5, 11, 19});
  for (std::int64_t a = -23; a < 46; a += 5) {
    for (std::int64_t b = 0; b < 23; ++b) {
      REQUIRE(shift(shift(s, a), b) == shift(s, a + b));
      REQUIRE(shift(s, a).weight() == s.weight());
      REQUIRE(shift(s, a).period() == s.period());
    }
  }
}

TEST_CASE("canonical text form round-trips") {
  const CharacteristicSet s(77, {0, 56, 35, 14, 70, 49, 28});
  CHECK(to_text(s) == "77:{0,14,28,35,49,56,70}");
  CHECK(parse_characteristic_set(to_text(s)) == s);
  CHECK(parse_characteristic_set("  40 : { 0, 17 ,34,11,28,5 } ") == CharacteristicSet(40, {0, 5, 11, 17, 28, 34}));
  CHECK_THROWS_AS(parse_characteristic_set("40:{}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_characteristic_set("40{1,2}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_characteristic_set("40:{1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_characteristic_set("40:{1,x}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_characteristic_set("40:{1,40}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_characteristic_set("40:{1,1}"), std::invalid_argument);
}

TEST_CASE("SequenceSet requires a common period") {
  const SequenceSet set({CharacteristicSet(35, {0, 10}), CharacteristicSet(35, {1})});
  CHECK(set.size() == 2);
  CHECK(set.period() == 35);
  CHECK_FALSE(set.has_constant_weight(2));
  CHECK_THROWS_AS(SequenceSet({}), std::invalid_argument);
  CHECK_THROWS_AS(SequenceSet({CharacteristicSet(35, {0}), CharacteristicSet(36, {0})}), std::invalid_argument);
  CHECK_THROWS_AS(set.at(2), std::out_of_range);
}
