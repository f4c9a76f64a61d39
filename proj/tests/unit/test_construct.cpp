#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "uiseq/construct.hpp"
#include "uiseq/correlate.hpp"
#include "uiseq/residue.hpp"

using namespace uiseq;

namespace {

CharacteristicSet set77(std::vector<std::int64_t> e) { return CharacteristicSet(77, std::move(e)); }

}  // namespace

TEST_CASE("CRTm for M = 6 reproduces the eight worked-example sets") {
  const auto family = build_crtm(6);
  CHECK(family.prime() == 7);
  CHECK(family.cofactor() == 11);
  CHECK(family.period() == 77);
  CHECK(family.weight() == 7);
  REQUIRE(family.size() == 8);
  const std::vector<CharacteristicSet> expected = {
      set77({0, 56, 35, 14, 70, 49, 28}), set77({0, 1, 2, 3, 4, 5, 6}),
      set77({0, 23, 46, 69, 15, 38, 61}), set77({0, 45, 13, 58, 26, 71, 39}),
      set77({0, 67, 57, 47, 37, 27, 17}), set77({0, 12, 24, 36, 48, 60, 72}),
      set77({0, 34, 68, 25, 59, 16, 50}), set77({0, 11, 22, 33, 44, 55, 66}),
  };
  for (std::size_t j = 0; j < 8; ++j) CHECK(family.sequence(j) == expected[j]);
  // Listing order by y follows the printed order of the example.
  const auto head = family.ordered_elements(0);
  CHECK(std::vector<std::int64_t>(head.begin(), head.end()) == std::vector<std::int64_t>{0, 56, 35, 14, 70, 49, 28});
  CHECK(family.generator(0) == 56);
  CHECK(family.generator(5) == 12);
  CHECK(family.generator_pair(7) == CrtPair{1, 0});
}

TEST_CASE("CRTm for M = 4") {
  const auto family = build_crtm(4);
  CHECK(family.size() == 6);
  CHECK(family.period() == 35);
  CHECK(family.weight() == 5);
  CHECK_THROWS_AS(build_crtm(3), std::invalid_argument);
  CHECK_THROWS_AS(build_crt(3), std::invalid_argument);
}

TEST_CASE("CRT truncates each CRTm sequence by its tail element") {
  const auto crt = build_crt(6);
  REQUIRE(crt.size() == 8);
  CHECK(crt.has_constant_weight(6));
  CHECK(crt[5] == set77({0, 12, 24, 36, 48, 60}));
  const auto full = build_crtm(6);
  for (std::size_t j = 0; j < crt.size(); ++j) {
    const auto ordered = full.ordered_elements(j);
    CHECK(crt[j] == CharacteristicSet(77, std::vector<std::int64_t>(ordered.begin(), ordered.end() - 1)));
  }
}

TEST_CASE("lambda_c is 2 for CRTm and 1 for CRT") {
  CHECK(lambda_c(build_crtm(6).all()) == 2);
  for (const std::int64_t m : {6, 8, 10}) CHECK(lambda_c(build_crt(m)) == 1);
}

TEST_CASE("CRTm family invariants for M in [4, 64]") {
  for (std::int64_t m = 4; m <= 64; ++m) {
    const auto family = build_crtm(m);
    const auto p = family.prime();
    REQUIRE(p == smallest_prime_greater_than(m));
    REQUIRE(family.cofactor() == 2 * m - 1);
    REQUIRE(family.period() == p * (2 * m - 1));
    REQUIRE(family.size() == static_cast<std::size_t>(p + 1));
    for (std::size_t j = 0; j < family.size(); ++j) {
      const auto& s = family.sequence(j);
      REQUIRE(s.weight() == static_cast<std::size_t>(m + 1));
      REQUIRE(s.period() == family.period());
      const auto pair = family.generator_pair(j);
      REQUIRE(pair == (j < static_cast<std::size_t>(p) ? CrtPair{static_cast<std::int64_t>(j), 1} : CrtPair{1, 0}));
      const auto g = family.generator(j);
      REQUIRE(g == oracle::crt_scan(pair.a, pair.b, p, 2 * m - 1));
      std::vector<std::int64_t> progression;
      for (std::int64_t y = 0; y <= m; ++y) progression.push_back(y * g % family.period());
      REQUIRE(s == CharacteristicSet(family.period(), progression));
      REQUIRE(equi_difference_generator(s).has_value());
    }
  }
}

TEST_CASE("select_users") {
  const auto family = build_crtm(6);
  const std::vector<std::size_t> walk{0, 1, 3, 4, 5, 7};
  const auto set = select_users(family, walk);
  REQUIRE(set.size() == 6);
  CHECK(set[2] == family.sequence(3));
  CHECK(set[5] == family.sequence(7));

  const std::vector<std::size_t> single{0};
  CHECK(select_users(family, single).size() == 1);
  const std::vector<std::size_t> dup{0, 0};
  CHECK_THROWS_AS(select_users(family, dup), std::invalid_argument);
  const std::vector<std::size_t> out{0, 8};
  CHECK_THROWS_AS(select_users(family, out), std::out_of_range);
  CHECK_THROWS_AS(select_users(family, std::vector<std::size_t>{}), std::invalid_argument);
}

TEST_CASE("default user selection skips the burst sequence") {
  const auto family = build_crtm(8);
  CHECK(default_user_selection(family) == std::vector<std::size_t>{0, 2, 3, 4, 5, 6, 7, 8});
  const auto set = default_user_set(Construction::crt, 8);
  CHECK(set.size() == 8);
  CHECK(set.has_constant_weight(8));
  CHECK(set.period() == 165);
}

TEST_CASE("construction names") {
  CHECK(parse_construction("crtm") == Construction::crtm);
  CHECK(parse_construction("crt") == Construction::crt);
  CHECK(to_string(Construction::crtm) == "crtm");
  CHECK_THROWS_AS(parse_construction("eps"), std::invalid_argument);
}
