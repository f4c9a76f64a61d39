#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace uiseq {

/// Slot indices in one period where a protocol sequence transmits: a nonempty
/// subset of Z_L, stored sorted ascending so that equality is set equality.
class CharacteristicSet {
 public:
  /// Throws std::invalid_argument unless period >= 1, elements is nonempty,
  /// every element lies in [0, period) and no element repeats.
  CharacteristicSet(std::int64_t period, std::vector<std::int64_t> elements);

  /// Like the constructor, but first reduces every element modulo period.
  static CharacteristicSet from_residues(std::int64_t period, std::vector<std::int64_t> elements);

  std::int64_t period() const noexcept { return period_; }
  std::size_t weight() const noexcept { return elements_.size(); }
  std::span<const std::int64_t> elements() const noexcept { return elements_; }
  bool contains(std::int64_t slot) const noexcept;

  friend bool operator==(const CharacteristicSet&, const CharacteristicSet&) = default;

 private:
  std::int64_t period_;
  std::vector<std::int64_t> elements_;
};

/// {k + tau mod L : k in set}.
CharacteristicSet shift(const CharacteristicSet& set, std::int64_t tau);

inline std::size_t weight(const CharacteristicSet& set) noexcept { return set.weight(); }

/// Canonical text form `L:{e1,e2,...}`.
std::string to_text(const CharacteristicSet& set);

/// Parses the canonical text form. Whitespace around tokens is tolerated;
/// elements may appear in any order. Throws std::invalid_argument.
CharacteristicSet parse_characteristic_set(std::string_view text);

/// Characteristic sets sharing one period. Members are addressed 0-based.
class SequenceSet {
 public:
  /// Throws std::invalid_argument if members is empty or periods differ.
  explicit SequenceSet(std::vector<CharacteristicSet> members);

  std::int64_t period() const noexcept { return members_.front().period(); }
  std::size_t size() const noexcept { return members_.size(); }
  const CharacteristicSet& operator[](std::size_t i) const { return members_[i]; }
  const CharacteristicSet& at(std::size_t i) const;
  std::span<const CharacteristicSet> members() const noexcept { return members_; }

  /// True when every member has weight w.
  bool has_constant_weight(std::size_t w) const noexcept;

  friend bool operator==(const SequenceSet&, const SequenceSet&) = default;

 private:
  std::vector<CharacteristicSet> members_;
};

}  // namespace uiseq
