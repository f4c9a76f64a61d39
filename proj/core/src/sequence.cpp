#include "uiseq/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "uiseq/residue.hpp"

namespace uiseq {

CharacteristicSet::CharacteristicSet(std::int64_t period, std::vector<std::int64_t> elements)
    : period_(period), elements_(std::move(elements)) {
  if (period_ < 1) throw std::invalid_argument("characteristic set: period must be >= 1");
  if (elements_.empty()) throw std::invalid_argument("characteristic set: weight must be >= 1");
  std::sort(elements_.begin(), elements_.end());
  if (elements_.front() < 0 || elements_.back() >= period_) {
    throw std::invalid_argument("characteristic set: element outside [0, period)");
  }
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw std::invalid_argument("characteristic set: repeated element");
  }
}

CharacteristicSet CharacteristicSet::from_residues(std::int64_t period,
                                                   std::vector<std::int64_t> elements) {
  if (period < 1) throw std::invalid_argument("characteristic set: period must be >= 1");
  for (auto& e : elements) e = mod_reduce(e, period);
  return CharacteristicSet(period, std::move(elements));
}

bool CharacteristicSet::contains(std::int64_t slot) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), slot);
}

CharacteristicSet shift(const CharacteristicSet& set, std::int64_t tau) {
  const std::int64_t period = set.period();
  const std::int64_t t = mod_reduce(tau, period);
  const auto src = set.elements();
  // Elements >= period - t wrap to the front; the result stays sorted.
  const auto split = std::lower_bound(src.begin(), src.end(), period - t);
  std::vector<std::int64_t> out;
  out.reserve(src.size());
  for (auto it = split; it != src.end(); ++it) out.push_back(*it + t - period);
  for (auto it = src.begin(); it != split; ++it) out.push_back(*it + t);
  return CharacteristicSet(period, std::move(out));
}

std::string to_text(const CharacteristicSet& set) {
  std::string out = std::to_string(set.period());
  out += ":{";
  bool first = true;
  for (const auto e : set.elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int(std::string_view token) {
  token = trim(token);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw std::invalid_argument("characteristic set: bad integer '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

CharacteristicSet parse_characteristic_set(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("characteristic set: expected 'L:{...}'");
  }
  const std::int64_t period = parse_int(text.substr(0, colon));
  auto body = trim(text.substr(colon + 1));
  if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
    throw std::invalid_argument("characteristic set: expected braces around elements");
  }
  body = trim(body.substr(1, body.size() - 2));
  std::vector<std::int64_t> elements;
  while (!body.empty()) {
    const auto comma = body.find(',');
    elements.push_back(parse_int(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
    if (trim(body).empty()) throw std::invalid_argument("characteristic set: trailing comma");
  }
  return CharacteristicSet(period, std::move(elements));
}

SequenceSet::SequenceSet(std::vector<CharacteristicSet> members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("sequence set: no members");
  const auto period = members_.front().period();
  for (const auto& m : members_) {
    if (m.period() != period) throw std::invalid_argument("sequence set: members have different periods");
  }
}

const CharacteristicSet& SequenceSet::at(std::size_t i) const {
  if (i >= members_.size()) throw std::out_of_range("sequence set: member index out of range");
  return members_[i];
}

bool SequenceSet::has_constant_weight(std::size_t w) const noexcept {
  return std::all_of(members_.begin(), members_.end(),
                     [w](const CharacteristicSet& m) { return m.weight() == w; });
}

}  // namespace uiseq
