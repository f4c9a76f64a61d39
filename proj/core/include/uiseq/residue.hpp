#pragma once

#include <cstdint>
#include <vector>

namespace uiseq {

/// Canonical representative of x in Z_m, always in [0, m).
constexpr std::int64_t mod_reduce(std::int64_t x, std::int64_t m) noexcept {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

struct ExtendedGcd {
  std::int64_t gcd;
  std::int64_t x;  // a*x + b*y == gcd
  std::int64_t y;
};

ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) noexcept;

/// Inverse of a modulo m. Throws std::domain_error when gcd(a, m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// Deterministic trial division.
bool is_prime(std::int64_t n) noexcept;

/// Least prime p with p > m (strict).
std::int64_t smallest_prime_greater_than(std::int64_t m);

/// Distinct prime factors of n >= 1, ascending.
std::vector<std::int64_t> distinct_prime_factors(std::int64_t n);

}  // namespace uiseq
