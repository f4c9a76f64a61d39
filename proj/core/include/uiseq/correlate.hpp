#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "uiseq/sequence.hpp"

namespace uiseq {

/// H(tau) = |a ∩ (b + tau)|. Throws std::invalid_argument on mismatched periods.
std::size_t hamming_crosscorr(const CharacteristicSet& a, const CharacteristicSet& b, std::int64_t tau);

struct CrossCorrelation {
  std::size_t value = 0;             ///< max over tau of H(tau)
  std::vector<std::int64_t> shifts;  ///< every tau attaining value, ascending
};

/// Maximum Hamming cross-correlation and its maximizing shifts. Only shifts in
/// a - b can be nonzero, so the scan is a histogram over the w_a * w_b
/// pairwise differences rather than L set intersections.
CrossCorrelation max_crosscorr(const CharacteristicSet& a, const CharacteristicSet& b);

/// Largest max_crosscorr over distinct members. Throws std::invalid_argument for M < 2.
std::size_t lambda_c(const SequenceSet& set);

/// Pairwise correlation tables for a sequence set, computed once.
class CorrelationProfile {
 public:
  explicit CorrelationProfile(SequenceSet set);

  const SequenceSet& set() const noexcept { return set_; }
  std::size_t size() const noexcept { return set_.size(); }

  /// H_{I_i I_j}; the diagonal holds the weights.
  std::size_t value(std::size_t i, std::size_t j) const;
  /// T_{i,k}: shifts tau of I_k attaining H_{I_i I_k}, ascending.
  std::span<const std::int64_t> maximizing_shifts(std::size_t i, std::size_t k) const;
  /// Requires M >= 2.
  std::size_t lambda_c() const;
  /// B_i: every k != i attaining max_j H_{I_i I_j}, ascending. Requires M >= 2.
  std::vector<std::size_t> best_interferers(std::size_t i) const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  SequenceSet set_;
  std::vector<std::size_t> values_;
  std::vector<std::vector<std::int64_t>> shifts_;
};

/// B_i of set (0-based indices). Throws std::out_of_range for i >= M.
std::vector<std::size_t> best_interferers(const SequenceSet& set, std::size_t i);

/// I_i \ (I_k + tau) as a plain sorted vector; may be empty. Throws
/// std::invalid_argument when k == i or tau is not in T_{i,k}.
std::vector<std::int64_t> residual_elements(const SequenceSet& set, std::size_t i, std::size_t k,
                                            std::int64_t tau);

/// Same as residual_elements, as a characteristic set. Throws
/// std::domain_error when the residual is empty.
CharacteristicSet residual(const SequenceSet& set, std::size_t i, std::size_t k, std::int64_t tau);

/// d*(I): nonzero differences a - b mod L, ascending. Requires weight >= 2.
std::vector<std::int64_t> diff_set(const CharacteristicSet& set);

/// d*(a) ∩ d*(b), ascending.
std::vector<std::int64_t> common_differences(const CharacteristicSet& a, const CharacteristicSet& b);

/// |d*(I)| < 2w - 2. Requires weight >= 2.
bool is_exceptional(const CharacteristicSet& set);

/// Smallest g with I = {0, g, 2g, ..., (w-1)g} in Z_L, if any.
std::optional<std::int64_t> equi_difference_generator(const CharacteristicSet& set);

struct Progression {
  std::int64_t start;
  std::int64_t step;
  friend bool operator==(const Progression&, const Progression&) = default;
};

/// I as {s, s+g, ..., s+(w-1)g}. A 0-anchored progression is preferred when
/// one exists, so for equi-difference sets start == 0 and step is the
/// generator.
std::optional<Progression> arithmetic_progression(const CharacteristicSet& set);

namespace detail {

/// Span-level kernels shared with the verifier. Inputs are sorted residues mod period.
CrossCorrelation max_crosscorr(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                               std::int64_t period);
std::vector<std::int64_t> diff_set(std::span<const std::int64_t> elements, std::int64_t period);
/// a \ (b + tau)
std::vector<std::int64_t> remove_shifted(std::span<const std::int64_t> a,
                                         std::span<const std::int64_t> b, std::int64_t tau,
                                         std::int64_t period);

}  // namespace detail

}  // namespace uiseq
