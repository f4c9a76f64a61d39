#include "uiseq/bounds.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "uiseq/residue.hpp"

namespace uiseq {

std::string_view to_string(PiMode mode) noexcept {
  return mode == PiMode::prime_divisors ? "prime" : "packing";
}

PiMode parse_pi_mode(std::string_view name) {
  if (name == "prime") return PiMode::prime_divisors;
  if (name == "packing") return PiMode::coprime_packing;
  throw std::invalid_argument("unknown pi mode '" + std::string(name) + "'");
}

namespace {

class CoprimePacking {
 public:
  CoprimePacking(std::int64_t period, std::int64_t k) {
    for (std::int64_t d = 2; d <= std::min(period, k); ++d) {
      if (period % d == 0) divisors_.push_back(d);
    }
    for (const auto p : distinct_prime_factors(period)) {
      if (p <= k) primes_.push_back(p);
    }
  }

  std::int64_t solve() {
    std::vector<std::int64_t> chosen;
    descend(0, chosen);
    return best_;
  }

 private:
  // Each chosen divisor consumes at least one prime <= k that no other
  // chosen divisor may use; the unused primes bound what is still reachable.
  std::int64_t reachable(const std::vector<std::int64_t>& chosen) const {
    std::int64_t free = 0;
    for (const auto p : primes_) {
      if (std::none_of(chosen.begin(), chosen.end(), [p](std::int64_t d) { return d % p == 0; })) ++free;
    }
    return static_cast<std::int64_t>(chosen.size()) + free;
  }

  void descend(std::size_t from, std::vector<std::int64_t>& chosen) {
    best_ = std::max(best_, static_cast<std::int64_t>(chosen.size()));
    if (reachable(chosen) <= best_) return;
    for (std::size_t i = from; i < divisors_.size(); ++i) {
      const auto d = divisors_[i];
      if (std::any_of(chosen.begin(), chosen.end(), [d](std::int64_t c) { return std::gcd(c, d) != 1; })) {
        continue;
      }
      chosen.push_back(d);
      descend(i + 1, chosen);
      chosen.pop_back();
    }
  }

  std::vector<std::int64_t> divisors_;
  std::vector<std::int64_t> primes_;
  std::int64_t best_ = 0;
};

}  // namespace

std::int64_t pi_count(std::int64_t period, std::int64_t k, PiMode mode) {
  if (period < 1) throw std::invalid_argument("pi_count: period must be >= 1");
  if (k < 2 || period < 2) return 0;
  if (mode == PiMode::prime_divisors) {
    const auto primes = distinct_prime_factors(period);
    return std::count_if(primes.begin(), primes.end(), [k](std::int64_t p) { return p <= k; });
  }
  if (period > packing_search_limit) {
    throw std::invalid_argument("pi_count: packing search limited to L <= 10^6");
  }
  return CoprimePacking(period, k).solve();
}

std::int64_t lower_bound_general(std::int64_t users) {
  if (users < 1) throw std::invalid_argument("lower_bound_general: M must be >= 1");
  return (8 * users * users + 8) / 9;
}

std::int64_t lower_bound_equi_difference(std::int64_t users, std::int64_t period, PiMode mode) {
  if (users < 4) throw std::invalid_argument("equi-difference bound requires M >= 4");
  const std::int64_t pi = pi_count(period, 2 * users - 4, mode);
  return (2 * users - 4) * users - 2 * pi * (users - 2) - 2 * users + 1;
}

std::string Ratio::to_string() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.6g", value());
  return buf;
}

int Ratio::compare(std::int64_t a, std::int64_t b) const noexcept {
  __extension__ using i128 = __int128;
  const i128 lhs = static_cast<i128>(num) * b;
  const i128 rhs = static_cast<i128>(a) * den;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

BoundReport bound_report(std::int64_t users, PiMode mode) {
  if (users < 4) throw std::invalid_argument("bound_report: M must be >= 4");
  BoundReport r;
  r.users = users;
  r.prime = smallest_prime_greater_than(users);
  r.period = r.prime * (2 * users - 1);
  r.pi = pi_count(r.period, 2 * users - 4, mode);
  r.lb_general = lower_bound_general(users);
  r.lb_equi_difference = lower_bound_equi_difference(users, r.period, mode);
  r.ratio = Ratio{r.period, 2 * users * users};
  return r;
}

std::vector<RatioPoint> ratio_trend(std::span<const std::int64_t> users) {
  std::vector<RatioPoint> out;
  out.reserve(users.size());
  for (const auto m : users) {
    if (m < 4) throw std::invalid_argument("ratio_trend: M must be >= 4");
    const auto p = smallest_prime_greater_than(m);
    out.push_back({m, Ratio{p * (2 * m - 1), 2 * m * m}});
  }
  return out;
}

}  // namespace uiseq
