#include "uiseq/correlate.hpp"

#include <algorithm>
#include <stdexcept>

#include "uiseq/residue.hpp"

namespace uiseq {

namespace {

void require_same_period(const CharacteristicSet& a, const CharacteristicSet& b) {
  if (a.period() != b.period()) throw std::invalid_argument("correlation: mismatched periods");
}

}  // namespace

namespace detail {

CrossCorrelation max_crosscorr(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                               std::int64_t period) {
  CrossCorrelation out;
  if (a.empty() || b.empty()) return out;
  const std::size_t pairs = a.size() * b.size();

  if (static_cast<std::uint64_t>(period) <= 8 * static_cast<std::uint64_t>(pairs)) {
    std::vector<std::uint32_t> hist(static_cast<std::size_t>(period), 0);
    for (const auto x : a) {
      for (const auto y : b) {
        const auto d = x - y;
        ++hist[static_cast<std::size_t>(d < 0 ? d + period : d)];
      }
    }
    const auto best = *std::max_element(hist.begin(), hist.end());
    out.value = best;
    for (std::size_t t = 0; t < hist.size(); ++t) {
      if (hist[t] == best) out.shifts.push_back(static_cast<std::int64_t>(t));
    }
    return out;
  }

  std::vector<std::int64_t> diffs;
  diffs.reserve(pairs);
  for (const auto x : a) {
    for (const auto y : b) {
      const auto d = x - y;
      diffs.push_back(d < 0 ? d + period : d);
    }
  }
  std::sort(diffs.begin(), diffs.end());
  for (std::size_t s = 0; s < diffs.size();) {
    std::size_t e = s;
    while (e < diffs.size() && diffs[e] == diffs[s]) ++e;
    const std::size_t run = e - s;
    if (run > out.value) {
      out.value = run;
      out.shifts.clear();
    }
    if (run == out.value) out.shifts.push_back(diffs[s]);
    s = e;
  }
  return out;
}

std::vector<std::int64_t> diff_set(std::span<const std::int64_t> elements, std::int64_t period) {
  std::vector<std::int64_t> out;
  out.reserve(elements.size() * (elements.size() - (elements.empty() ? 0 : 1)));
  for (const auto x : elements) {
    for (const auto y : elements) {
      if (x != y) out.push_back(mod_reduce(x - y, period));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::int64_t> remove_shifted(std::span<const std::int64_t> a,
                                         std::span<const std::int64_t> b, std::int64_t tau,
                                         std::int64_t period) {
  std::vector<std::int64_t> shifted;
  shifted.reserve(b.size());
  for (const auto y : b) shifted.push_back(mod_reduce(y + tau, period));
  std::sort(shifted.begin(), shifted.end());
  std::vector<std::int64_t> out;
  std::set_difference(a.begin(), a.end(), shifted.begin(), shifted.end(), std::back_inserter(out));
  return out;
}

}  // namespace detail

std::size_t hamming_crosscorr(const CharacteristicSet& a, const CharacteristicSet& b, std::int64_t tau) {
  require_same_period(a, b);
  const auto shifted = shift(b, tau);
  std::size_t count = 0;
  auto ia = a.elements().begin();
  auto ib = shifted.elements().begin();
  while (ia != a.elements().end() && ib != shifted.elements().end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

CrossCorrelation max_crosscorr(const CharacteristicSet& a, const CharacteristicSet& b) {
  require_same_period(a, b);
  return detail::max_crosscorr(a.elements(), b.elements(), a.period());
}

std::size_t lambda_c(const SequenceSet& set) {
  if (set.size() < 2) throw std::invalid_argument("lambda_c: need at least two sequences");
  std::size_t best = 0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      best = std::max(best, max_crosscorr(set[i], set[j]).value);
    }
  }
  return best;
}

CorrelationProfile::CorrelationProfile(SequenceSet set) : set_(std::move(set)) {
  const std::size_t m = set_.size();
  const std::int64_t period = set_.period();
  values_.assign(m * m, 0);
  shifts_.assign(m * m, {});
  for (std::size_t i = 0; i < m; ++i) {
    values_[index(i, i)] = set_[i].weight();
    shifts_[index(i, i)] = {0};
    for (std::size_t j = i + 1; j < m; ++j) {
      auto cc = detail::max_crosscorr(set_[i].elements(), set_[j].elements(), period);
      // T_{j,i} = -T_{i,j}
      std::vector<std::int64_t> mirrored;
      mirrored.reserve(cc.shifts.size());
      for (const auto t : cc.shifts) mirrored.push_back(mod_reduce(-t, period));
      std::sort(mirrored.begin(), mirrored.end());
      values_[index(i, j)] = values_[index(j, i)] = cc.value;
      shifts_[index(i, j)] = std::move(cc.shifts);
      shifts_[index(j, i)] = std::move(mirrored);
    }
  }
}

std::size_t CorrelationProfile::index(std::size_t i, std::size_t j) const {
  if (i >= set_.size() || j >= set_.size()) throw std::out_of_range("profile: index out of range");
  return i * set_.size() + j;
}

std::size_t CorrelationProfile::value(std::size_t i, std::size_t j) const { return values_[index(i, j)]; }

std::span<const std::int64_t> CorrelationProfile::maximizing_shifts(std::size_t i, std::size_t k) const {
  return shifts_[index(i, k)];
}

std::size_t CorrelationProfile::lambda_c() const {
  if (size() < 2) throw std::invalid_argument("lambda_c: need at least two sequences");
  std::size_t best = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) best = std::max(best, value(i, j));
  }
  return best;
}

std::vector<std::size_t> CorrelationProfile::best_interferers(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("best_interferers: index out of range");
  if (size() < 2) throw std::invalid_argument("best_interferers: need at least two sequences");
  std::size_t best = 0;
  for (std::size_t j = 0; j < size(); ++j) {
    if (j != i) best = std::max(best, value(i, j));
  }
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < size(); ++j) {
    if (j != i && value(i, j) == best) out.push_back(j);
  }
  return out;
}

std::vector<std::size_t> best_interferers(const SequenceSet& set, std::size_t i) {
  if (i >= set.size()) throw std::out_of_range("best_interferers: index out of range");
  if (set.size() < 2) throw std::invalid_argument("best_interferers: need at least two sequences");
  std::vector<std::size_t> values(set.size(), 0);
  std::size_t best = 0;
  for (std::size_t j = 0; j < set.size(); ++j) {
    if (j == i) continue;
    values[j] = max_crosscorr(set[i], set[j]).value;
    best = std::max(best, values[j]);
  }
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < set.size(); ++j) {
    if (j != i && values[j] == best) out.push_back(j);
  }
  return out;
}

std::vector<std::int64_t> residual_elements(const SequenceSet& set, std::size_t i, std::size_t k,
                                            std::int64_t tau) {
  if (i >= set.size() || k >= set.size()) throw std::out_of_range("residual: index out of range");
  if (i == k) throw std::invalid_argument("residual: k must differ from i");
  const std::int64_t period = set.period();
  const std::int64_t t = mod_reduce(tau, period);
  const auto cc = max_crosscorr(set[i], set[k]);
  if (!std::binary_search(cc.shifts.begin(), cc.shifts.end(), t)) {
    throw std::invalid_argument("residual: shift is not a maximizing shift of T_{i,k}");
  }
  return detail::remove_shifted(set[i].elements(), set[k].elements(), t, period);
}

CharacteristicSet residual(const SequenceSet& set, std::size_t i, std::size_t k, std::int64_t tau) {
  auto elements = residual_elements(set, i, k, tau);
  if (elements.empty()) throw std::domain_error("residual: I_i is covered entirely by I_k + tau");
  return CharacteristicSet(set.period(), std::move(elements));
}

std::vector<std::int64_t> diff_set(const CharacteristicSet& set) {
  if (set.weight() < 2) throw std::invalid_argument("diff_set: weight must be >= 2");
  return detail::diff_set(set.elements(), set.period());
}

std::vector<std::int64_t> common_differences(const CharacteristicSet& a, const CharacteristicSet& b) {
  require_same_period(a, b);
  const auto da = detail::diff_set(a.elements(), a.period());
  const auto db = detail::diff_set(b.elements(), b.period());
  std::vector<std::int64_t> out;
  std::set_intersection(da.begin(), da.end(), db.begin(), db.end(), std::back_inserter(out));
  return out;
}

bool is_exceptional(const CharacteristicSet& set) {
  return diff_set(set).size() < 2 * set.weight() - 2;
}

namespace {

bool generates(const CharacteristicSet& set, std::int64_t start, std::int64_t step) {
  const std::int64_t period = set.period();
  std::vector<std::int64_t> terms;
  terms.reserve(set.weight());
  std::int64_t term = start;
  for (std::size_t k = 0; k < set.weight(); ++k) {
    if (!set.contains(term)) return false;
    terms.push_back(term);
    term = mod_reduce(term + step, period);
  }
  std::sort(terms.begin(), terms.end());
  return std::adjacent_find(terms.begin(), terms.end()) == terms.end();
}

}  // namespace

std::optional<std::int64_t> equi_difference_generator(const CharacteristicSet& set) {
  if (!set.contains(0)) return std::nullopt;
  if (set.weight() == 1) return 0;
  // g = 1*g must itself be an element, so only the nonzero elements of I
  // (all of which lie in d*(I)) are candidates.
  for (const auto g : set.elements()) {
    if (g != 0 && generates(set, 0, g)) return g;
  }
  return std::nullopt;
}

std::optional<Progression> arithmetic_progression(const CharacteristicSet& set) {
  if (const auto g = equi_difference_generator(set)) return Progression{0, *g};
  if (set.weight() == 1) return Progression{set.elements().front(), 0};
  for (const auto start : set.elements()) {
    for (const auto next : set.elements()) {
      if (next == start) continue;
      const auto step = mod_reduce(next - start, set.period());
      if (generates(set, start, step)) return Progression{start, step};
    }
  }
  return std::nullopt;
}

}  // namespace uiseq
