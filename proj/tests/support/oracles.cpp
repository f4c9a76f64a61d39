#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace uiseq::oracle {

std::vector<int> indicator(const CharacteristicSet& set) {
  std::vector<int> v(static_cast<std::size_t>(set.period()), 0);
  for (const auto e : set.elements()) v[static_cast<std::size_t>(e)] = 1;
  return v;
}

std::size_t crosscorr(const CharacteristicSet& a, const CharacteristicSet& b, std::int64_t tau) {
  const auto L = a.period();
  const auto va = indicator(a);
  const auto vb = indicator(b);
  std::size_t count = 0;
  for (std::int64_t t = 0; t < L; ++t) {
    const auto src = ((t - tau) % L + L) % L;
    if (va[t] && vb[src]) ++count;
  }
  return count;
}

std::size_t max_crosscorr(const CharacteristicSet& a, const CharacteristicSet& b) {
  std::size_t best = 0;
  for (std::int64_t tau = 0; tau < a.period(); ++tau) best = std::max(best, crosscorr(a, b, tau));
  return best;
}

std::vector<std::int64_t> maximizing_shifts(const CharacteristicSet& a, const CharacteristicSet& b) {
  const auto best = max_crosscorr(a, b);
  std::vector<std::int64_t> out;
  for (std::int64_t tau = 0; tau < a.period(); ++tau) {
    if (crosscorr(a, b, tau) == best) out.push_back(tau);
  }
  return out;
}

std::vector<std::int64_t> differences(const CharacteristicSet& set) {
  std::set<std::int64_t> d;
  const auto L = set.period();
  for (const auto x : set.elements()) {
    for (const auto y : set.elements()) {
      if (x != y) d.insert(((x - y) % L + L) % L);
    }
  }
  return {d.begin(), d.end()};
}

std::vector<std::int64_t> set_minus_shift(const CharacteristicSet& a, const CharacteristicSet& b, std::int64_t tau) {
  const auto L = a.period();
  std::vector<std::int64_t> out;
  for (const auto x : a.elements()) {
    bool hit = false;
    for (const auto y : b.elements()) hit = hit || ((y + tau) % L + L) % L == x;
    if (!hit) out.push_back(x);
  }
  return out;
}

bool unblocked(const SequenceSet& set, std::size_t user) {
  const auto L = set.period();
  const std::size_t m = set.size();
  std::vector<std::vector<int>> ind;
  for (const auto& s : set.members()) ind.push_back(indicator(s));
  std::vector<std::int64_t> tau(m, 0);
  for (;;) {
    bool some_clear = false;
    for (const auto x : set[user].elements()) {
      bool covered = false;
      for (std::size_t j = 0; j < m && !covered; ++j) {
        if (j == user) continue;
        covered = ind[j][static_cast<std::size_t>(((x - tau[j]) % L + L) % L)] != 0;
      }
      if (!covered) {
        some_clear = true;
        break;
      }
    }
    if (!some_clear) return false;
    std::size_t pos = 0;
    while (pos < m) {
      if (pos == user) {
        ++pos;
        continue;
      }
      if (++tau[pos] < L) break;
      tau[pos] = 0;
      ++pos;
    }
    if (pos == m) return true;
  }
}

bool is_ui(const SequenceSet& set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!unblocked(set, i)) return false;
  }
  return true;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d < n; ++d) {
    if (d * d > n) break;
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t crt_scan(std::int64_t a, std::int64_t b, std::int64_t p, std::int64_t q) {
  for (std::int64_t x = 0; x < p * q; ++x) {
    if (x % p == a && x % q == b) return x;
  }
  return -1;
}

ExactDelays exact_protocol_delays(const SequenceSet& set) {
  const auto L = set.period();
  const std::size_t m = set.size();
  std::vector<std::vector<int>> ind;
  for (const auto& s : set.members()) ind.push_back(indicator(s));
  std::vector<std::int64_t> tau(m, 0);
  double individual_sum = 0.0;
  double group_sum = 0.0;
  std::uint64_t patterns = 0;
  for (;;) {
    std::vector<std::int64_t> first(m, -1);
    std::size_t done = 0;
    for (std::int64_t t = 0; t < 2 * L && done < m; ++t) {
      std::size_t senders = 0;
      std::size_t who = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (ind[j][static_cast<std::size_t>(((t - tau[j]) % L + L) % L)]) {
          ++senders;
          who = j;
        }
      }
      if (senders == 1 && first[who] < 0) {
        first[who] = t + 1;
        ++done;
      }
    }
    std::int64_t group = 0;
    for (const auto f : first) {
      individual_sum += static_cast<double>(f);
      group = std::max(group, f);
    }
    group_sum += static_cast<double>(group);
    ++patterns;
    std::size_t pos = 0;
    while (pos < m && ++tau[pos] == L) tau[pos++] = 0;
    if (pos == m) break;
  }
  return {individual_sum / static_cast<double>(patterns * m), group_sum / static_cast<double>(patterns)};
}

}  // namespace uiseq::oracle
