#include "uiseq/verify.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <string>

#include "uiseq/correlate.hpp"
#include "uiseq/residue.hpp"

namespace uiseq {

std::string_view to_string(VerifyMethod m) noexcept {
  switch (m) {
    case VerifyMethod::exhaustive: return "exhaustive";
    case VerifyMethod::cover_search: return "cover_search";
    case VerifyMethod::lemma2: return "lemma2";
  }
  return "unknown";
}

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : std::runtime_error("exhaustive verification needs " + std::to_string(required) +
                         " shift patterns, budget is " + std::to_string(budget) +
                         "; use the lemma2 method"),
      required_(required),
      budget_(budget) {}

std::uint64_t pattern_count(const SequenceSet& set) noexcept {
  const auto period = static_cast<std::uint64_t>(set.period());
  std::uint64_t count = 1;
  for (std::size_t j = 1; j < set.size(); ++j) {
    if (count > std::numeric_limits<std::uint64_t>::max() / period) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= period;
  }
  return count;
}

namespace {

void require_pair_or_more(const SequenceSet& set) {
  if (set.size() < 2) throw std::invalid_argument("verification needs at least two sequences");
}

/// For a probed user i: which of its slots each other member covers at each
/// shift, as bitmasks over the positions of I_i. Shifts that cover nothing
/// have no entry.
class CoverTable {
 public:
  CoverTable(const SequenceSet& set, std::size_t user) : user_(user) {
    const auto target = set[user].elements();
    words_ = (target.size() + 63) / 64;
    full_.assign(words_, 0);
    for (std::size_t p = 0; p < target.size(); ++p) full_[p / 64] |= std::uint64_t{1} << (p % 64);

    for (std::size_t j = 0; j < set.size(); ++j) {
      if (j == user) continue;
      others_.push_back(j);
      std::vector<std::pair<std::int64_t, std::size_t>> hits;  // (tau, position in I_i)
      for (std::size_t p = 0; p < target.size(); ++p) {
        for (const auto y : set[j].elements()) hits.emplace_back(mod_reduce(target[p] - y, set.period()), p);
      }
      std::sort(hits.begin(), hits.end());
      std::vector<Entry> entries;
      for (std::size_t s = 0; s < hits.size();) {
        const std::int64_t tau = hits[s].first;
        const std::size_t offset = masks_.size();
        masks_.resize(offset + words_, 0);
        for (; s < hits.size() && hits[s].first == tau; ++s) {
          masks_[offset + hits[s].second / 64] |= std::uint64_t{1} << (hits[s].second % 64);
        }
        entries.push_back({tau, offset});
      }
      entries_.push_back(std::move(entries));
    }
  }

  struct Entry {
    std::int64_t tau;
    std::size_t offset;
  };

  std::size_t user() const { return user_; }
  std::size_t words() const { return words_; }
  std::size_t others() const { return others_.size(); }
  std::size_t member(std::size_t other) const { return others_[other]; }
  const std::vector<Entry>& entries(std::size_t other) const { return entries_[other]; }
  const std::uint64_t* mask(std::size_t offset) const { return masks_.data() + offset; }
  const std::uint64_t* mask_at(std::size_t other, std::int64_t tau) const {
    const auto& e = entries_[other];
    const auto it = std::lower_bound(e.begin(), e.end(), tau,
                                     [](const Entry& x, std::int64_t t) { return x.tau < t; });
    return it != e.end() && it->tau == tau ? mask(it->offset) : nullptr;
  }
  const std::vector<std::uint64_t>& full() const { return full_; }

 private:
  std::size_t user_;
  std::size_t words_ = 0;
  std::vector<std::size_t> others_;
  std::vector<std::vector<Entry>> entries_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::uint64_t> full_;
};

class PatternEnumerator {
 public:
  PatternEnumerator(const CoverTable& table, std::int64_t period)
      : table_(table),
        period_(period),
        prefix_((table.others() + 1) * table.words(), 0),
        chosen_(table.others(), 0) {}

  bool find_cover() { return descend(0); }
  const std::vector<std::int64_t>& chosen() const { return chosen_; }

 private:
  bool descend(std::size_t depth) {
    const std::size_t words = table_.words();
    const std::uint64_t* prefix = prefix_.data() + depth * words;
    if (depth == table_.others()) {
      return std::equal(prefix, prefix + words, table_.full().begin());
    }
    std::uint64_t* next = prefix_.data() + (depth + 1) * words;
    const auto& entries = table_.entries(depth);
    std::size_t cursor = 0;
    for (std::int64_t tau = 0; tau < period_; ++tau) {
      if (cursor < entries.size() && entries[cursor].tau == tau) {
        const std::uint64_t* m = table_.mask(entries[cursor].offset);
        for (std::size_t w = 0; w < words; ++w) next[w] = prefix[w] | m[w];
        ++cursor;
      } else {
        std::copy(prefix, prefix + words, next);
      }
      if (descend(depth + 1)) {
        chosen_[depth] = tau;
        return true;
      }
    }
    return false;
  }

  const CoverTable& table_;
  std::int64_t period_;
  std::vector<std::uint64_t> prefix_;
  std::vector<std::int64_t> chosen_;
};

class CoverSearch {
 public:
  explicit CoverSearch(const CoverTable& table, const SequenceSet& set)
      : table_(table), set_(set), chosen_(table.others(), 0), used_(table.others(), false) {
    max_cover_.reserve(table.others());
    for (std::size_t o = 0; o < table.others(); ++o) {
      std::size_t best = 0;
      for (const auto& e : table.entries(o)) {
        std::size_t bits = 0;
        for (std::size_t w = 0; w < table.words(); ++w) bits += std::popcount(table.mask(e.offset)[w]);
        best = std::max(best, bits);
      }
      max_cover_.push_back(best);
    }
  }

  bool find_cover() { return descend(table_.full()); }
  const std::vector<std::int64_t>& chosen() const { return chosen_; }

 private:
  bool descend(const std::vector<std::uint64_t>& uncovered) {
    std::size_t remaining_bits = 0;
    for (const auto w : uncovered) remaining_bits += std::popcount(w);
    if (remaining_bits == 0) return true;
    std::size_t capacity = 0;
    for (std::size_t o = 0; o < table_.others(); ++o) {
      if (!used_[o]) capacity += max_cover_[o];
    }
    if (capacity < remaining_bits) return false;

    std::size_t word = 0;
    while (uncovered[word] == 0) ++word;
    const std::size_t position = word * 64 + static_cast<std::size_t>(std::countr_zero(uncovered[word]));
    const std::int64_t slot = set_[table_.user()].elements()[position];

    std::vector<std::uint64_t> next(uncovered.size());
    for (std::size_t o = 0; o < table_.others(); ++o) {
      if (used_[o]) continue;
      used_[o] = true;
      for (const auto y : set_[table_.member(o)].elements()) {
        const std::int64_t tau = mod_reduce(slot - y, set_.period());
        const std::uint64_t* m = table_.mask_at(o, tau);
        for (std::size_t w = 0; w < next.size(); ++w) next[w] = uncovered[w] & ~m[w];
        if (descend(next)) {
          chosen_[o] = tau;
          return true;
        }
      }
      used_[o] = false;
    }
    return false;
  }

  const CoverTable& table_;
  const SequenceSet& set_;
  std::vector<std::int64_t> chosen_;
  std::vector<bool> used_;
  std::vector<std::size_t> max_cover_;
};

CoverWitness make_cover_witness(const CoverTable& table, std::size_t members,
                                const std::vector<std::int64_t>& chosen) {
  CoverWitness w{table.user(), std::vector<std::int64_t>(members, 0)};
  for (std::size_t o = 0; o < table.others(); ++o) w.shifts[table.member(o)] = chosen[o];
  return w;
}

template <typename Probe>
UiVerdict all_users(const SequenceSet& set, VerifyMethod method, Probe probe) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    auto v = probe(i);
    if (!v.is_ui) return v;
  }
  return UiVerdict{true, method, std::nullopt, std::nullopt};
}

void require_lemma2_shape(const SequenceSet& set, std::string_view what) {
  require_pair_or_more(set);
  if (!set.has_constant_weight(set.size() + 1)) {
    throw std::invalid_argument(std::string(what) + " requires every sequence to have weight M+1");
  }
}

bool disjoint_sorted(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace

UiVerdict is_unblocked_exhaustive(const SequenceSet& set, std::size_t user, std::uint64_t budget) {
  require_pair_or_more(set);
  if (user >= set.size()) throw std::out_of_range("verify: user index out of range");
  const auto required = pattern_count(set);
  if (required > budget) throw BudgetExceeded(required, budget);

  const CoverTable table(set, user);
  PatternEnumerator enumerator(table, set.period());
  if (!enumerator.find_cover()) return UiVerdict{true, VerifyMethod::exhaustive, std::nullopt, std::nullopt};
  return UiVerdict{false, VerifyMethod::exhaustive, make_cover_witness(table, set.size(), enumerator.chosen()),
                   std::nullopt};
}

UiVerdict is_ui_exhaustive(const SequenceSet& set, std::uint64_t budget) {
  require_pair_or_more(set);
  const auto required = pattern_count(set);
  if (required > budget) throw BudgetExceeded(required, budget);
  return all_users(set, VerifyMethod::exhaustive,
                   [&](std::size_t i) { return is_unblocked_exhaustive(set, i, budget); });
}

UiVerdict is_unblocked_cover_search(const SequenceSet& set, std::size_t user) {
  require_pair_or_more(set);
  if (user >= set.size()) throw std::out_of_range("verify: user index out of range");
  const CoverTable table(set, user);
  CoverSearch search(table, set);
  if (!search.find_cover()) return UiVerdict{true, VerifyMethod::cover_search, std::nullopt, std::nullopt};
  return UiVerdict{false, VerifyMethod::cover_search, make_cover_witness(table, set.size(), search.chosen()),
                   std::nullopt};
}

UiVerdict is_ui_cover_search(const SequenceSet& set) {
  require_pair_or_more(set);
  return all_users(set, VerifyMethod::cover_search,
                   [&](std::size_t i) { return is_unblocked_cover_search(set, i); });
}

UiVerdict is_ui_lemma2(const SequenceSet& set, Lemma2Options options) {
  require_lemma2_shape(set, "lemma2 verification");
  const CorrelationProfile profile(set);
  const std::size_t m = set.size();
  const std::int64_t period = set.period();

  UiVerdict verdict{true, VerifyMethod::lemma2, std::nullopt, true};
  auto fail = [&](Lemma2Witness w) {
    if (verdict.is_ui) {
      verdict.is_ui = false;
      verdict.witness = std::move(w);
    }
  };

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && profile.value(i, j) > 2) {
        fail({Lemma2Clause::pairwise, i, j, std::nullopt, std::nullopt, profile.value(i, j)});
        verdict.difference_form_is_ui = false;
        return verdict;
      }
    }
  }

  std::vector<std::vector<std::int64_t>> member_diffs;
  member_diffs.reserve(m);
  for (std::size_t j = 0; j < m; ++j) member_diffs.push_back(detail::diff_set(set[j].elements(), period));

  // A residual is a subset of I_i, so H(residual, I_j) <= H(I_i, I_j) and
  // d*(residual) is inside d*(I_i): pairs that are already clean stay clean.
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::size_t> risky_h;
    std::vector<std::size_t> risky_d;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      if (profile.value(i, j) >= 2) risky_h.push_back(j);
      if (!disjoint_sorted(member_diffs[i], member_diffs[j])) risky_d.push_back(j);
    }
    if (risky_h.empty() && risky_d.empty()) continue;

    auto interferers = profile.best_interferers(i);
    if (options.strict) {
      for (std::size_t k = 0; k < m; ++k) {
        if (k != i && profile.value(i, k) == 2) interferers.push_back(k);
      }
      std::sort(interferers.begin(), interferers.end());
      interferers.erase(std::unique(interferers.begin(), interferers.end()), interferers.end());
    }
    // The same residual arises from many (k, tau); it only needs checking
    // against each j once, with k excluded from j.
    std::map<std::vector<std::int64_t>, std::vector<std::size_t>> checked;
    for (const auto k : interferers) {
      for (const auto tau : profile.maximizing_shifts(i, k)) {
        const auto rest = detail::remove_shifted(set[i].elements(), set[k].elements(), tau, period);
        auto& done = checked[rest];
        std::vector<std::int64_t> rest_diffs;
        bool have_diffs = false;
        auto todo = [&](std::size_t j) {
          return j != k && std::find(done.begin(), done.end(), j) == done.end();
        };
        for (const auto j : risky_h) {
          if (!todo(j)) continue;
          const auto h = detail::max_crosscorr(rest, set[j].elements(), period).value;
          if (h > 1) fail({Lemma2Clause::residual, i, j, k, tau, h});
        }
        for (const auto j : risky_d) {
          if (!todo(j)) continue;
          if (!have_diffs) {
            rest_diffs = detail::diff_set(rest, period);
            have_diffs = true;
          }
          if (!disjoint_sorted(rest_diffs, member_diffs[j])) verdict.difference_form_is_ui = false;
        }
        for (std::size_t j = 0; j < m; ++j) {
          if (j != i && todo(j)) done.push_back(j);
        }
      }
    }
  }
  return verdict;
}

Proposition1Result check_proposition1(const SequenceSet& set) {
  require_lemma2_shape(set, "residual difference check");
  const CorrelationProfile profile(set);
  const std::size_t m = set.size();
  const std::int64_t period = set.period();

  struct Residual {
    std::vector<std::int64_t> diffs;
    std::vector<std::pair<std::size_t, std::int64_t>> sources;  // (k, tau_k)
  };
  std::vector<std::vector<Residual>> residuals(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::map<std::vector<std::int64_t>, std::size_t> seen;
    for (const auto k : profile.best_interferers(i)) {
      for (const auto tau : profile.maximizing_shifts(i, k)) {
        auto rest = detail::remove_shifted(set[i].elements(), set[k].elements(), tau, period);
        auto [it, inserted] = seen.try_emplace(rest, residuals[i].size());
        if (inserted) residuals[i].push_back({detail::diff_set(rest, period), {}});
        residuals[i][it->second].sources.emplace_back(k, tau);
      }
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (const auto& ri : residuals[i]) {
        for (const auto& rj : residuals[j]) {
          // Some source pair must avoid the excluded case k == j and l == i.
          std::optional<std::pair<std::size_t, std::size_t>> pick;
          for (std::size_t a = 0; a < ri.sources.size() && !pick; ++a) {
            for (std::size_t b = 0; b < rj.sources.size() && !pick; ++b) {
              if (!(ri.sources[a].first == j && rj.sources[b].first == i)) pick = {a, b};
            }
          }
          if (!pick) continue;
          if (disjoint_sorted(ri.diffs, rj.diffs)) continue;
          Proposition1Violation v;
          v.i = i;
          v.k = ri.sources[pick->first].first;
          v.tau_k = ri.sources[pick->first].second;
          v.j = j;
          v.l = rj.sources[pick->second].first;
          v.tau_l = rj.sources[pick->second].second;
          std::set_intersection(ri.diffs.begin(), ri.diffs.end(), rj.diffs.begin(), rj.diffs.end(),
                                std::back_inserter(v.shared_differences));
          return {false, std::move(v)};
        }
      }
    }
  }
  return {true, std::nullopt};
}

std::optional<CoverWitness> cover_from_lemma2_witness(const SequenceSet& set, const Lemma2Witness& witness) {
  const std::size_t m = set.size();
  const std::int64_t period = set.period();
  if (witness.i >= m || witness.j >= m) return std::nullopt;
  CoverWitness cover{witness.i, std::vector<std::int64_t>(m, 0)};
  std::vector<bool> placed(m, false);
  placed[witness.i] = true;

  std::vector<std::int64_t> open(set[witness.i].elements().begin(), set[witness.i].elements().end());
  auto place = [&](std::size_t member, std::int64_t tau) {
    cover.shifts[member] = tau;
    placed[member] = true;
    open = detail::remove_shifted(open, set[member].elements(), tau, period);
  };

  if (witness.clause == Lemma2Clause::residual) {
    if (!witness.k || !witness.tau_k || *witness.k >= m) return std::nullopt;
    place(*witness.k, mod_reduce(*witness.tau_k, period));
  }
  const auto best = detail::max_crosscorr(open, set[witness.j].elements(), period);
  if (best.shifts.empty()) return std::nullopt;
  place(witness.j, best.shifts.front());

  for (std::size_t member = 0; member < m && !open.empty(); ++member) {
    if (placed[member]) continue;
    place(member, mod_reduce(open.front() - set[member].elements().front(), period));
  }
  if (!open.empty()) return std::nullopt;
  return cover;
}

bool replay_witness(const SequenceSet& set, const Witness& witness) {
  if (const auto* cover = std::get_if<CoverWitness>(&witness)) {
    if (cover->user >= set.size() || cover->shifts.size() != set.size()) return false;
    std::vector<std::int64_t> open(set[cover->user].elements().begin(), set[cover->user].elements().end());
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (j == cover->user) continue;
      open = detail::remove_shifted(open, set[j].elements(), cover->shifts[j], set.period());
    }
    return open.empty();
  }

  const auto& w = std::get<Lemma2Witness>(witness);
  if (w.i >= set.size() || w.j >= set.size() || w.i == w.j) return false;
  if (w.clause == Lemma2Clause::pairwise) {
    const auto h = max_crosscorr(set[w.i], set[w.j]).value;
    return h > 2 && h == w.correlation;
  }
  if (!w.k || !w.tau_k || *w.k >= set.size() || *w.k == w.i || *w.k == w.j) return false;
  const CorrelationProfile profile(set);
  const auto interferers = profile.best_interferers(w.i);
  if (std::find(interferers.begin(), interferers.end(), *w.k) == interferers.end()) return false;
  const auto rest = residual_elements(set, w.i, *w.k, *w.tau_k);
  const auto h = detail::max_crosscorr(rest, set[w.j].elements(), set.period()).value;
  return h > 1 && h == w.correlation;
}

}  // namespace uiseq
