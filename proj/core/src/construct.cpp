#include "uiseq/construct.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "uiseq/residue.hpp"

namespace uiseq {

std::string_view to_string(Construction c) noexcept {
  return c == Construction::crtm ? "crtm" : "crt";
}

Construction parse_construction(std::string_view name) {
  if (name == "crtm") return Construction::crtm;
  if (name == "crt") return Construction::crt;
  throw std::invalid_argument("unknown construction '" + std::string(name) + "'");
}

std::size_t CrtFamily::weight() const noexcept {
  return static_cast<std::size_t>(construction_ == Construction::crtm ? users_ + 1 : users_);
}

CrtPair CrtFamily::generator_pair(std::size_t j) const {
  const auto p = static_cast<std::size_t>(prime());
  if (j > p) throw std::out_of_range("family: sequence index out of range");
  return j == p ? CrtPair{1, 0} : CrtPair{static_cast<std::int64_t>(j), 1};
}

std::int64_t CrtFamily::generator(std::size_t j) const { return crt_.inverse(generator_pair(j)); }

CrtFamily build_family(Construction construction, std::int64_t users) {
  if (users < 4) throw std::invalid_argument("construction requires M >= 4");
  const std::int64_t p = smallest_prime_greater_than(users);
  CrtFamily family(construction, users, CrtContext(p, 2 * users - 1));
  const std::int64_t last_y = construction == Construction::crtm ? users : users - 1;

  family.sequences_.reserve(static_cast<std::size_t>(p + 1));
  family.ordered_.reserve(static_cast<std::size_t>(p + 1));
  for (std::int64_t j = 0; j <= p; ++j) {
    std::vector<std::int64_t> ordered;
    ordered.reserve(static_cast<std::size_t>(last_y + 1));
    for (std::int64_t y = 0; y <= last_y; ++y) {
      const CrtPair pair = j < p ? CrtPair{j * y, y} : CrtPair{y, 0};
      ordered.push_back(family.crt_.inverse(pair));
    }
    family.sequences_.emplace_back(family.period(), ordered);
    family.ordered_.push_back(std::move(ordered));
  }
  return family;
}

SequenceSet build_crt(std::int64_t users) { return build_family(Construction::crt, users).all(); }

SequenceSet select_users(const CrtFamily& family, std::span<const std::size_t> indices) {
  if (indices.empty()) throw std::invalid_argument("select_users: no indices");
  std::vector<std::size_t> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("select_users: duplicate index");
  }
  std::vector<CharacteristicSet> chosen;
  chosen.reserve(indices.size());
  for (const auto j : indices) {
    if (j >= family.size()) throw std::out_of_range("select_users: index exceeds p_M");
    chosen.push_back(family.sequence(j));
  }
  return SequenceSet(std::move(chosen));
}

std::vector<std::size_t> default_user_selection(const CrtFamily& family) {
  std::vector<std::size_t> out{0};
  for (std::size_t j = 2; out.size() < static_cast<std::size_t>(family.users()); ++j) out.push_back(j);
  return out;
}

SequenceSet default_user_set(Construction construction, std::int64_t users) {
  const auto family = build_family(construction, users);
  const auto indices = default_user_selection(family);
  return select_users(family, indices);
}

}  // namespace uiseq
