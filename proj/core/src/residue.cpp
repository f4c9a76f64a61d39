#include "uiseq/residue.hpp"

#include <stdexcept>

namespace uiseq {

ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) noexcept {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m <= 0) throw std::domain_error("mod_inverse: modulus must be positive");
  const auto eg = extended_gcd(mod_reduce(a, m), m);
  if (eg.gcd != 1) throw std::domain_error("mod_inverse: argument not invertible");
  return mod_reduce(eg.x, m);
}

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::int64_t smallest_prime_greater_than(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("smallest_prime_greater_than: m must be >= 1");
  std::int64_t n = m + 1;
  while (!is_prime(n)) ++n;
  return n;
}

std::vector<std::int64_t> distinct_prime_factors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("distinct_prime_factors: n must be >= 1");
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace uiseq
