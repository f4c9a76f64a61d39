#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace uiseq {

/// How pi(L, k), the count of "distinct relatively prime divisors of L in
/// [2, k]", is read.
enum class PiMode {
  prime_divisors,   ///< |{p prime : p | L, p <= k}|
  coprime_packing,  ///< largest set of pairwise coprime divisors of L in [2, k], by search
};

std::string_view to_string(PiMode mode) noexcept;
/// "prime" or "packing".
PiMode parse_pi_mode(std::string_view name);

inline constexpr std::int64_t packing_search_limit = 1'000'000;

/// Returns 0 when k < 2. coprime_packing throws std::invalid_argument for
/// L > packing_search_limit.
std::int64_t pi_count(std::int64_t period, std::int64_t k, PiMode mode = PiMode::prime_divisors);

/// ceil(8 M^2 / 9), the period bound for any UI set of M sequences.
std::int64_t lower_bound_general(std::int64_t users);

/// (2M-4)M - 2 pi(L, 2M-4) (M-2) - 2M + 1: the finite-M period bound for
/// equi-difference UI sets of constant weight M+1 with period L. Can be <= 0.
/// Throws std::invalid_argument for M < 4.
std::int64_t lower_bound_equi_difference(std::int64_t users, std::int64_t period,
                                         PiMode mode = PiMode::prime_divisors);

/// Exact num/den with a 6-significant-digit rendering.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
  /// Exact comparison against a/b (b > 0).
  int compare(std::int64_t a, std::int64_t b) const noexcept;
};

struct BoundReport {
  std::int64_t users = 0;
  std::int64_t prime = 0;     ///< p_M
  std::int64_t period = 0;    ///< p_M (2M-1)
  std::int64_t pi = 0;        ///< pi(period, 2M-4)
  std::int64_t lb_general = 0;
  std::int64_t lb_equi_difference = 0;
  Ratio ratio;                ///< period / (2 M^2)
};

/// Throws std::invalid_argument for M < 4.
BoundReport bound_report(std::int64_t users, PiMode mode = PiMode::prime_divisors);

struct RatioPoint {
  std::int64_t users;
  Ratio ratio;
};

/// p_M (2M-1) / (2 M^2) for each M. Throws std::invalid_argument for any M < 4.
std::vector<RatioPoint> ratio_trend(std::span<const std::int64_t> users);

}  // namespace uiseq
