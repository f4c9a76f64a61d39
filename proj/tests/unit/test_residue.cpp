#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "uiseq/residue.hpp"

using namespace uiseq;

TEST_CASE("mod_reduce returns the canonical representative") {
  CHECK(mod_reduce(12, 7) == 5);
  CHECK(mod_reduce(-1, 7) == 6);
  CHECK(mod_reduce(-14, 7) == 0);
  CHECK(mod_reduce(0, 1) == 0);
}

TEST_CASE("extended_gcd satisfies Bezout") {
  for (std::int64_t a = 0; a < 60; ++a) {
    for (std::int64_t b = 0; b < 60; ++b) {
      const auto g = extended_gcd(a, b);
      CHECK(a * g.x + b * g.y == g.gcd);
      if (a != 0 || b != 0) {
        CHECK(g.gcd > 0);
        CHECK(a % g.gcd == 0);
        CHECK(b % g.gcd == 0);
      }
    }
  }
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(11, 7) == 2);  // 11 * 2 = 22 = 1 mod 7
  for (std::int64_t m = 2; m < 50; ++m) {
    for (std::int64_t a = 1; a < m; ++a) {
      if (extended_gcd(a, m).gcd != 1) {
        CHECK_THROWS_AS(mod_inverse(a, m), std::domain_error);
      } else {
        CHECK(mod_reduce(a * mod_inverse(a, m), m) == 1);
      }
    }
  }
}

TEST_CASE("is_prime agrees with the trial-division oracle") {
  for (std::int64_t n = -5; n < 20000; ++n) {
    REQUIRE(is_prime(n) == oracle::is_prime(n));
  }
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(2147483647LL * 3));
}

TEST_CASE("smallest_prime_greater_than is strict") {
  CHECK(smallest_prime_greater_than(6) == 7);
  CHECK(smallest_prime_greater_than(8) == 11);
  CHECK(smallest_prime_greater_than(1) == 2);
  CHECK(smallest_prime_greater_than(7) == 11);
  CHECK(smallest_prime_greater_than(10) == 11);
  CHECK_THROWS_AS(smallest_prime_greater_than(0), std::invalid_argument);
  for (std::int64_t m = 1; m < 3000; ++m) {
    const auto p = smallest_prime_greater_than(m);
    REQUIRE(p > m);
    REQUIRE(oracle::is_prime(p));
    for (std::int64_t k = m + 1; k < p; ++k) REQUIRE_FALSE(oracle::is_prime(k));
  }
}

TEST_CASE("distinct_prime_factors") {
  CHECK(distinct_prime_factors(77) == std::vector<std::int64_t>{7, 11});
  CHECK(distinct_prime_factors(12) == std::vector<std::int64_t>{2, 3});
  CHECK(distinct_prime_factors(1).empty());
  CHECK(distinct_prime_factors(97) == std::vector<std::int64_t>{97});
}
