#include "uiseq/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "uiseq/residue.hpp"
#include "uiseq/rng.hpp"

namespace uiseq {

std::string_view to_string(DelayConvention c) noexcept {
  return c == DelayConvention::inclusive ? "inclusive" : "exclusive";
}

std::string_view to_string(IndividualAveraging a) noexcept {
  return a == IndividualAveraging::per_user ? "per_user" : "per_sample";
}

std::string_view to_string(RandomAccessMethod m) noexcept {
  return m == RandomAccessMethod::success_gaps ? "success_gaps" : "per_slot";
}

namespace {

constexpr std::uint64_t block_size = 4096;

std::int64_t crtm_period(std::int64_t users) {
  return smallest_prime_greater_than(users) * (2 * users - 1);
}

/// Exact accumulators; integer sums make the merge order irrelevant except
/// for the per-sample mean, which is merged in block order.
struct Accumulator {
  __extension__ using u128 = unsigned __int128;

  std::uint64_t individual_count = 0;
  std::uint64_t individual_sum = 0;
  u128 individual_sumsq = 0;
  std::uint64_t group_sum = 0;
  u128 group_sumsq = 0;
  std::int64_t min_group = std::numeric_limits<std::int64_t>::max();
  std::int64_t max_group = std::numeric_limits<std::int64_t>::min();
  std::uint64_t used = 0;
  std::uint64_t truncated = 0;
  double per_sample_mean_sum = 0.0;

  void add(const SampleOutcome& s) {
    if (s.truncated) {
      ++truncated;
      return;
    }
    ++used;
    std::uint64_t sample_sum = 0;
    for (const auto d : s.individual) {
      const auto v = static_cast<std::uint64_t>(d);
      sample_sum += v;
      individual_sumsq += static_cast<u128>(v) * v;
    }
    individual_sum += sample_sum;
    individual_count += s.individual.size();
    per_sample_mean_sum += static_cast<double>(sample_sum) / static_cast<double>(s.individual.size());
    const auto g = static_cast<std::uint64_t>(s.group);
    group_sum += g;
    group_sumsq += static_cast<u128>(g) * g;
    min_group = std::min(min_group, s.group);
    max_group = std::max(max_group, s.group);
  }

  void merge(const Accumulator& o) {
    individual_count += o.individual_count;
    individual_sum += o.individual_sum;
    individual_sumsq += o.individual_sumsq;
    group_sum += o.group_sum;
    group_sumsq += o.group_sumsq;
    min_group = std::min(min_group, o.min_group);
    max_group = std::max(max_group, o.max_group);
    used += o.used;
    truncated += o.truncated;
    per_sample_mean_sum += o.per_sample_mean_sum;
  }
};

double sample_stddev(std::uint64_t n, std::uint64_t sum, Accumulator::u128 sumsq) {
  if (n < 2) return 0.0;
  const long double mean = static_cast<long double>(sum) / n;
  const long double var = (static_cast<long double>(sumsq) - mean * static_cast<long double>(sum)) / (n - 1);
  return var > 0 ? static_cast<double>(std::sqrt(var)) : 0.0;
}

class SampleEngine {
 public:
  explicit SampleEngine(const SimConfig& config)
      : config_(config), horizon_(effective_horizon(config)) {
    if (const auto* p = std::get_if<ProtocolScheme>(&config.scheme)) {
      protocol_ = p;
      occupancy_.assign(static_cast<std::size_t>(p->sequences.period()), 0);
    } else {
      random_ = &std::get<RandomAccessScheme>(config.scheme);
    }
  }

  void run(std::uint64_t index, SampleOutcome& out) {
    Xoshiro256 rng(substream_seed(config_.master_seed, index));
    draw_active(rng, out.active);
    out.individual.assign(out.active.size(), -1);
    out.truncated = false;
    if (protocol_ != nullptr) {
      run_protocol(rng, out);
    } else if (random_->method == RandomAccessMethod::success_gaps) {
      run_success_gaps(rng, out);
    } else {
      run_per_slot(rng, out);
    }
    out.group = 0;
    for (auto& d : out.individual) {
      if (d < 0 || d > horizon_) {
        out.truncated = true;
        continue;
      }
      if (config_.convention == DelayConvention::exclusive) --d;
      out.group = std::max(out.group, d);
    }
  }

 private:
  void draw_active(Xoshiro256& rng, std::vector<std::size_t>& active) const {
    active.clear();
    if (config_.activation_probability >= 1.0) {
      for (std::size_t u = 0; u < config_.users; ++u) active.push_back(u);
      return;
    }
    while (active.empty()) {
      for (std::size_t u = 0; u < config_.users; ++u) {
        if (uniform_unit(rng) < config_.activation_probability) active.push_back(u);
      }
    }
  }

  // Delays are produced in the inclusive convention; run() converts.
  void run_protocol(Xoshiro256& rng, SampleOutcome& out) {
    const auto& set = protocol_->sequences;
    const std::int64_t period = set.period();
    offsets_.clear();
    for (std::size_t a = 0; a < out.active.size(); ++a) {
      offsets_.push_back(static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(period))));
    }
    const auto start = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(period)));

    auto slot_of = [period](std::int64_t e, std::int64_t tau) {
      const std::int64_t s = e + tau;
      return static_cast<std::size_t>(s >= period ? s - period : s);
    };
    for (std::size_t a = 0; a < out.active.size(); ++a) {
      for (const auto e : set[out.active[a]].elements()) ++occupancy_[slot_of(e, offsets_[a])];
    }
    for (std::size_t a = 0; a < out.active.size(); ++a) {
      std::int64_t best = -1;
      for (const auto e : set[out.active[a]].elements()) {
        const auto slot = slot_of(e, offsets_[a]);
        if (occupancy_[slot] != 1) continue;
        const std::int64_t wait = mod_reduce(static_cast<std::int64_t>(slot) - start, period);
        if (best < 0 || wait < best) best = wait;
      }
      out.individual[a] = best < 0 ? -1 : best + 1;
    }
    for (std::size_t a = 0; a < out.active.size(); ++a) {
      for (const auto e : set[out.active[a]].elements()) occupancy_[slot_of(e, offsets_[a])] = 0;
    }
  }

  void run_success_gaps(Xoshiro256& rng, SampleOutcome& out) const {
    const double p = random_->transmit_probability;
    const auto k = static_cast<double>(out.active.size());
    const double success = k * p * std::pow(1.0 - p, k - 1.0);
    const double log_fail = std::log1p(-success);
    std::size_t remaining = out.active.size();
    std::int64_t slot = 0;
    while (remaining > 0) {
      // Geometric gap on {1, 2, ...} to the next slot with exactly one sender.
      const double u = 1.0 - uniform_unit(rng);
      const double gap = success >= 1.0 ? 1.0 : 1.0 + std::floor(std::log(u) / log_fail);
      if (gap > static_cast<double>(horizon_ - slot)) return;
      slot += static_cast<std::int64_t>(gap);
      const auto winner = uniform_below(rng, out.active.size());
      if (out.individual[winner] < 0) {
        out.individual[winner] = slot;
        --remaining;
      }
    }
  }

  void run_per_slot(Xoshiro256& rng, SampleOutcome& out) const {
    const double p = random_->transmit_probability;
    std::size_t remaining = out.active.size();
    for (std::int64_t slot = 1; slot <= horizon_ && remaining > 0; ++slot) {
      std::size_t senders = 0;
      std::size_t sender = 0;
      for (std::size_t a = 0; a < out.active.size(); ++a) {
        if (uniform_unit(rng) < p) {
          ++senders;
          sender = a;
        }
      }
      if (senders == 1 && out.individual[sender] < 0) {
        out.individual[sender] = slot;
        --remaining;
      }
    }
  }

  const SimConfig& config_;
  std::int64_t horizon_;
  const ProtocolScheme* protocol_ = nullptr;
  const RandomAccessScheme* random_ = nullptr;
  std::vector<std::uint32_t> occupancy_;
  std::vector<std::int64_t> offsets_;
};

}  // namespace

void validate(const SimConfig& config) {
  if (config.users < 1) throw std::invalid_argument("simulation: need at least one user");
  if (!(config.activation_probability > 0.0 && config.activation_probability <= 1.0)) {
    throw std::invalid_argument("simulation: activation probability must be in (0, 1]");
  }
  if (config.samples < 1) throw std::invalid_argument("simulation: samples must be >= 1");
  if (config.horizon && *config.horizon < 1) throw std::invalid_argument("simulation: horizon must be >= 1");
  if (const auto* p = std::get_if<ProtocolScheme>(&config.scheme)) {
    if (p->sequences.size() < config.users) {
      throw std::invalid_argument("simulation: fewer sequences than users");
    }
  } else {
    const double ps = std::get<RandomAccessScheme>(config.scheme).transmit_probability;
    if (!(ps > 0.0 && ps < 1.0)) throw std::invalid_argument("simulation: p_s must be in (0, 1)");
  }
}

std::int64_t effective_horizon(const SimConfig& config) {
  if (config.horizon) return *config.horizon;
  if (const auto* p = std::get_if<ProtocolScheme>(&config.scheme)) return 2 * p->sequences.period();
  return std::max<std::int64_t>(4 * crtm_period(static_cast<std::int64_t>(config.users)), 100'000);
}

SampleOutcome simulate_sample(const SimConfig& config, std::uint64_t index) {
  validate(config);
  SampleEngine engine(config);
  SampleOutcome out;
  engine.run(index, out);
  return out;
}

DelayStats run_simulation(const SimConfig& config) {
  validate(config);
  const std::uint64_t blocks = (config.samples + block_size - 1) / block_size;
  std::vector<Accumulator> partial(blocks);
  std::atomic<std::uint64_t> next{0};

  auto work = [&] {
    SampleEngine engine(config);
    SampleOutcome outcome;
    for (std::uint64_t b = next++; b < blocks; b = next++) {
      const std::uint64_t end = std::min(config.samples, (b + 1) * block_size);
      for (std::uint64_t s = b * block_size; s < end; ++s) {
        engine.run(s, outcome);
        partial[b].add(outcome);
      }
    }
  };

  const auto workers = static_cast<std::uint64_t>(std::max(1u, config.workers));
  if (workers == 1 || blocks == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < std::min(workers, blocks); ++w) pool.emplace_back(work);
  }

  Accumulator total;
  for (const auto& p : partial) total.merge(p);

  DelayStats stats;
  stats.horizon = effective_horizon(config);
  stats.samples_used = total.used;
  stats.truncated_samples = total.truncated;
  stats.individual_count = total.individual_count;
  if (total.used == 0) return stats;
  stats.mean_individual =
      config.averaging == IndividualAveraging::per_user
          ? static_cast<double>(total.individual_sum) / static_cast<double>(total.individual_count)
          : total.per_sample_mean_sum / static_cast<double>(total.used);
  stats.mean_group = static_cast<double>(total.group_sum) / static_cast<double>(total.used);
  stats.min_group = total.min_group;
  stats.max_group = total.max_group;
  stats.stddev_individual = sample_stddev(total.individual_count, total.individual_sum, total.individual_sumsq);
  stats.stddev_group = sample_stddev(total.used, total.group_sum, total.group_sumsq);
  return stats;
}

DelayStats run_protocol_sim(const SimConfig& config) {
  if (!std::holds_alternative<ProtocolScheme>(config.scheme)) {
    throw std::invalid_argument("run_protocol_sim: configuration is not a protocol-sequence scheme");
  }
  return run_simulation(config);
}

DelayStats run_random_access_sim(const SimConfig& config) {
  if (!std::holds_alternative<RandomAccessScheme>(config.scheme)) {
    throw std::invalid_argument("run_random_access_sim: configuration is not a random-access scheme");
  }
  return run_simulation(config);
}

double expected_delay_random(std::int64_t users, double transmit_probability, double tolerance) {
  if (users < 2) throw std::invalid_argument("expected_delay_random: M must be >= 2");
  const double p = transmit_probability;
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("expected_delay_random: p_s must be in (0, 1)");
  if (!(tolerance > 0.0)) throw std::invalid_argument("expected_delay_random: tolerance must be positive");

  const double others = static_cast<double>(users - 1);
  const double success = p * std::pow(1.0 - p, others);
  const double beta = 1.0 - success;
  if (!(beta < 1.0)) return std::numeric_limits<double>::infinity();

  if (success < 1e-6) {
    // Term-by-term summation would need ~ln(1/tol)/success terms. Replace it
    // by Euler-Maclaurin: integral H_{M-1} / ln(1/beta) plus half the first
    // term; the derivative corrections vanish at i = 0 for M >= 3 and are
    // O(success) for M = 2.
    double harmonic = 0.0;
    for (std::int64_t k = 1; k < users; ++k) harmonic += 1.0 / static_cast<double>(k);
    return harmonic / -std::log1p(-success) + 0.5;
  }

  double sum = 0.0;
  double beta_power = 1.0;
  for (;;) {
    const double term = -std::expm1(others * std::log1p(-beta_power));
    if (term < tolerance) break;
    sum += term;
    beta_power *= beta;
  }
  return sum;
}

double optimal_ps(std::int64_t users, double activation_probability) {
  const double expected_users = static_cast<double>(users) * activation_probability;
  if (!(expected_users >= 1.0)) throw std::invalid_argument("optimal_ps: M * p_a must be >= 1");
  return 1.0 / expected_users;
}

}  // namespace uiseq
