#include "generators.hpp"

#include <algorithm>
#include <numeric>

#include "uiseq/construct.hpp"

namespace uiseq::testgen {

namespace {

std::int64_t below(std::mt19937_64& rng, std::int64_t n) {
  return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
}

CharacteristicSet uniform_subset(std::mt19937_64& rng, std::int64_t period, std::size_t w) {
  std::vector<std::int64_t> all(static_cast<std::size_t>(period));
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(w);
  return CharacteristicSet(period, all);
}

CharacteristicSet progression(std::mt19937_64& rng, std::int64_t period, std::size_t w) {
  for (;;) {
    const auto g = 1 + below(rng, period - 1);
    std::vector<std::int64_t> e;
    for (std::size_t y = 0; y < w; ++y) e.push_back(static_cast<std::int64_t>(y) * g % period);
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) == e.end()) return CharacteristicSet(period, e);
  }
}

CharacteristicSet moved(std::mt19937_64& rng, const CharacteristicSet& s) {
  std::vector<std::int64_t> e(s.elements().begin(), s.elements().end());
  for (;;) {
    const auto slot = below(rng, s.period());
    if (std::find(e.begin(), e.end(), slot) != e.end()) continue;
    e[static_cast<std::size_t>(below(rng, static_cast<std::int64_t>(e.size())))] = slot;
    return CharacteristicSet(s.period(), e);
  }
}

}  // namespace

std::vector<std::size_t> sample_indices(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

SequenceSet lemma2_instance(std::mt19937_64& rng) {
  const auto kind = below(rng, 4);
  if (kind == 0) {
    // Members of the M = 4 family (L = 35), some perturbed.
    static const auto family = build_crtm(4);
    const auto idx = sample_indices(rng, family.size(), 4);
    std::vector<CharacteristicSet> members;
    for (const auto j : idx) {
      members.push_back(below(rng, 3) == 0 ? moved(rng, family.sequence(j)) : family.sequence(j));
    }
    return SequenceSet(members);
  }
  const std::size_t m = 2 + static_cast<std::size_t>(below(rng, 3));
  const std::size_t w = m + 1;
  const std::int64_t period = static_cast<std::int64_t>(w) + 1 + below(rng, 40 - static_cast<std::int64_t>(w));
  std::vector<CharacteristicSet> members;
  for (std::size_t i = 0; i < m; ++i) {
    members.push_back(kind == 1 ? uniform_subset(rng, period, w) : progression(rng, period, w));
  }
  return SequenceSet(members);
}

}  // namespace uiseq::testgen
