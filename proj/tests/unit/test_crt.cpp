#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "oracles.hpp"
#include "uiseq/crt.hpp"

using namespace uiseq;

TEST_CASE("crt_forward and crt_inverse on the worked example") {
  CHECK(crt_forward(12, 7, 11) == CrtPair{5, 1});
  CHECK(crt_forward(0, 7, 11) == CrtPair{0, 0});
  CHECK(crt_forward(56, 7, 11) == CrtPair{0, 1});
  CHECK(crt_inverse({5, 1}, 7, 11) == 12);
  CHECK(crt_inverse({0, 0}, 7, 11) == 0);
  for (std::int64_t x = 0; x < 77; ++x) CHECK(crt_inverse(crt_forward(x, 7, 11), 7, 11) == x);
}

TEST_CASE("CrtContext rejects bad moduli and arguments") {
  CHECK_THROWS_AS(CrtContext(6, 9), std::invalid_argument);
  CHECK_THROWS_AS(CrtContext(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(crt_forward(3, 4, 6), std::invalid_argument);
  const CrtContext ctx(7, 11);
  CHECK_THROWS_AS(ctx.forward(77), std::out_of_range);
  CHECK_THROWS_AS(ctx.forward(-1), std::out_of_range);
  CHECK(ctx.inverse({-2, 12}) == ctx.inverse({5, 1}));
}

TEST_CASE("inverse matches a scanning oracle") {
  for (const auto [p, q] : {std::pair{5, 7}, {7, 11}, {11, 15}, {13, 25}, {2, 1}, {1, 9}}) {
    const CrtContext ctx(p, q);
    for (std::int64_t a = 0; a < p; ++a) {
      for (std::int64_t b = 0; b < q; ++b) REQUIRE(ctx.inverse({a, b}) == oracle::crt_scan(a, b, p, q));
    }
  }
}

TEST_CASE("CRT map is a bijection on [0, pq) for pq <= 1e5") {
  for (const auto [p, q] : {std::pair{5, 7}, {11, 19}, {31, 59}, {101, 199}, {257, 389}}) {
    const CrtContext ctx(p, q);
    std::vector<char> seen(static_cast<std::size_t>(p * q), 0);
    for (std::int64_t x = 0; x < p * q; ++x) {
      const auto pair = ctx.forward(x);
      REQUIRE(pair.a == x % p);
      REQUIRE(pair.b == x % q);
      REQUIRE(ctx.inverse(pair) == x);
      seen[static_cast<std::size_t>(pair.a * q + pair.b)] = 1;
    }
    CHECK(std::count(seen.begin(), seen.end(), 1) == p * q);
  }
}
