#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "uiseq/sequence.hpp"

namespace uiseq {

enum class DelayConvention {
  inclusive,  ///< the success slot counts: success in the first observed slot is delay 1
  exclusive,  ///< slots waited before the success slot: first observed slot is delay 0
};

enum class IndividualAveraging {
  per_user,    ///< every active user in every sample weighs the same
  per_sample,  ///< average within each sample, then across samples
};

enum class RandomAccessMethod {
  success_gaps,  ///< jump between collision-free slots; winner uniform among active users
  per_slot,      ///< one Bernoulli draw per active user per slot
};

std::string_view to_string(DelayConvention c) noexcept;
std::string_view to_string(IndividualAveraging a) noexcept;
std::string_view to_string(RandomAccessMethod m) noexcept;

/// Each active user reads its sequence from a uniformly random offset and
/// transmits in slot t iff t is in I_i + tau_i (mod L). The first `users`
/// members of the set are assigned to users 0..M-1.
struct ProtocolScheme {
  SequenceSet sequences;
};

/// Each active user transmits in every slot independently with probability p_s.
struct RandomAccessScheme {
  double transmit_probability = 0.0;
  RandomAccessMethod method = RandomAccessMethod::success_gaps;
};

struct SimConfig {
  std::variant<RandomAccessScheme, ProtocolScheme> scheme;
  std::size_t users = 0;
  double activation_probability = 1.0;
  std::uint64_t samples = 0;
  std::uint64_t master_seed = 0;
  /// Max slots a user may wait; defaults to 2L for protocol sequences and
  /// max(4 L_crtm, 10^5) for random access.
  std::optional<std::int64_t> horizon;
  DelayConvention convention = DelayConvention::inclusive;
  IndividualAveraging averaging = IndividualAveraging::per_user;
  unsigned workers = 1;
};

struct DelayStats {
  double mean_individual = 0.0;
  double mean_group = 0.0;
  std::int64_t min_group = 0;
  std::int64_t max_group = 0;
  double stddev_individual = 0.0;  ///< spread of single delays, not of the mean
  double stddev_group = 0.0;
  std::uint64_t individual_count = 0;  ///< active users over all used samples
  std::uint64_t samples_used = 0;
  std::uint64_t truncated_samples = 0;
  std::int64_t horizon = 0;

  friend bool operator==(const DelayStats&, const DelayStats&) = default;
};

/// One sample: which users were active and their delays.
struct SampleOutcome {
  std::vector<std::size_t> active;
  std::vector<std::int64_t> individual;  ///< parallel to active; -1 if never served
  std::int64_t group = 0;
  bool truncated = false;
};

/// Throws std::invalid_argument when the configuration is malformed.
void validate(const SimConfig& config);

/// Horizon after applying defaults.
std::int64_t effective_horizon(const SimConfig& config);

/// Replays sample `index` alone; identical to what the aggregate runs see.
SampleOutcome simulate_sample(const SimConfig& config, std::uint64_t index);

/// Aggregates samples 0..samples-1. Samples are grouped into fixed blocks and
/// merged in block order, so results are bit-identical for any worker count.
DelayStats run_simulation(const SimConfig& config);
/// As run_simulation; throws std::invalid_argument for the other scheme kind.
DelayStats run_protocol_sim(const SimConfig& config);
DelayStats run_random_access_sim(const SimConfig& config);

/// sum_{i>=0} 1 - (1 - beta^i)^(M-1) with beta = 1 - p_s (1 - p_s)^(M-1):
/// the expected wait of a user under random access. Summation stops at the
/// first term below tolerance. Requires M >= 2 and 0 < p_s < 1.
double expected_delay_random(std::int64_t users, double transmit_probability, double tolerance = 1e-12);

/// 1 / (M p_a), the minimizer of expected_delay_random with M p_a users.
/// Throws std::invalid_argument when M p_a < 1.
double optimal_ps(std::int64_t users, double activation_probability);

}  // namespace uiseq
