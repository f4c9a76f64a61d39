#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

#include "uiseq/sequence.hpp"

namespace uiseq {

enum class VerifyMethod { exhaustive, cover_search, lemma2 };

std::string_view to_string(VerifyMethod m) noexcept;

/// Shift pattern under which every slot of `user` is hit by another member.
/// shifts has one entry per member; shifts[user] is 0.
struct CoverWitness {
  std::size_t user = 0;
  std::vector<std::int64_t> shifts;
};

enum class Lemma2Clause {
  pairwise,  ///< H_{I_i I_j} > 2
  residual,  ///< H_{I_{i,k,tau_k} I_j} > 1
};

struct Lemma2Witness {
  Lemma2Clause clause = Lemma2Clause::pairwise;
  std::size_t i = 0;
  std::size_t j = 0;
  std::optional<std::size_t> k;       ///< residual clause only
  std::optional<std::int64_t> tau_k;  ///< residual clause only
  std::size_t correlation = 0;        ///< the offending correlation value
};

using Witness = std::variant<CoverWitness, Lemma2Witness>;

struct UiVerdict {
  bool is_ui = false;
  VerifyMethod method = VerifyMethod::exhaustive;
  std::optional<Witness> witness;  ///< present iff !is_ui
  /// lemma2 only: verdict of the same quantifiers phrased as difference-set
  /// disjointness d*(I_{i,k,tau_k}) ∩ d*(I_j) = ∅ instead of H <= 1.
  std::optional<bool> difference_form_is_ui;
};

inline constexpr std::uint64_t default_pattern_budget = 100'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget);
  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// L^(M-1), saturating at UINT64_MAX.
std::uint64_t pattern_count(const SequenceSet& set) noexcept;

/// Enumerates every pattern (tau_j : j != user) in lexicographic order with
/// tau_user fixed at 0 and reports the first one that covers I_user. Throws
/// BudgetExceeded when L^(M-1) > budget, std::invalid_argument for M < 2.
UiVerdict is_unblocked_exhaustive(const SequenceSet& set, std::size_t user,
                                  std::uint64_t budget = default_pattern_budget);
UiVerdict is_ui_exhaustive(const SequenceSet& set, std::uint64_t budget = default_pattern_budget);

/// Depth-first search that repeatedly covers the lowest uncovered slot of
/// I_user with an unused member; only shifts that hit that slot are tried.
/// Same verdicts as the exhaustive enumeration, far fewer nodes, but
/// exponential in M in the worst case.
UiVerdict is_unblocked_cover_search(const SequenceSet& set, std::size_t user);
UiVerdict is_ui_cover_search(const SequenceSet& set);

struct Lemma2Options {
  /// Also examine every k with H_{I_i I_k} == 2 in clause (ii), not only k in B_i.
  bool strict = false;
};

/// Characterization for constant weight M+1: (i) H_{I_i I_j} <= 2 for all
/// i != j; (ii) H_{I_{i,k,tau_k} I_j} <= 1 for k in B_i, tau_k in T_{i,k},
/// j not in {i, k}. Throws std::invalid_argument unless M >= 2 and every
/// member has weight M+1.
UiVerdict is_ui_lemma2(const SequenceSet& set, Lemma2Options options = {});

struct Proposition1Violation {
  std::size_t i = 0, k = 0;
  std::int64_t tau_k = 0;
  std::size_t j = 0, l = 0;
  std::int64_t tau_l = 0;
  std::vector<std::int64_t> shared_differences;
};

struct Proposition1Result {
  bool holds = true;
  std::optional<Proposition1Violation> violation;
};

/// d*(I_{i,k,tau_k}) ∩ d*(I_{j,l,tau_l}) = ∅ for i != j, k in B_i,
/// tau_k in T_{i,k}, l in B_j, tau_l in T_{j,l}, {i,k} != {j,l}.
/// Throws std::invalid_argument unless M >= 2 and the weight is M+1.
Proposition1Result check_proposition1(const SequenceSet& set);

/// Turns a residual-test violation into an explicit covering pattern by placing the
/// offending members at their maximizing shifts and aiming each remaining
/// member at one leftover slot. nullopt if the leftovers outnumber the members.
std::optional<CoverWitness> cover_from_lemma2_witness(const SequenceSet& set, const Lemma2Witness& witness);

/// True iff the witness reproduces its violation on set.
bool replay_witness(const SequenceSet& set, const Witness& witness);

}  // namespace uiseq
