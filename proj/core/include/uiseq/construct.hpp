#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "uiseq/crt.hpp"
#include "uiseq/sequence.hpp"

namespace uiseq {

enum class Construction {
  crtm,  ///< y = 0..M, weight M+1
  crt,   ///< y = 0..M-1, weight M (CRTm with the tail pair removed)
};

std::string_view to_string(Construction c) noexcept;
/// Accepts "crtm" or "crt"; throws std::invalid_argument otherwise.
Construction parse_construction(std::string_view name);

/// The p_M + 1 sequences built in Z_p x Z_{2M-1} and pulled back through the
/// CRT map, p = p_M the least prime above M. Sequence j < p is generated by
/// (j, 1) and sequence p by (1, 0); element y of sequence j is y times its
/// generator.
class CrtFamily {
 public:
  Construction construction() const noexcept { return construction_; }
  std::int64_t users() const noexcept { return users_; }
  std::int64_t prime() const noexcept { return crt_.p(); }
  std::int64_t cofactor() const noexcept { return crt_.q(); }
  std::int64_t period() const noexcept { return crt_.modulus(); }
  std::size_t weight() const noexcept;
  std::size_t size() const noexcept { return sequences_.size(); }
  const CrtContext& crt() const noexcept { return crt_; }

  const CharacteristicSet& sequence(std::size_t j) const { return sequences_.at(j); }
  /// Elements of sequence j listed by y (head first, tail last).
  std::span<const std::int64_t> ordered_elements(std::size_t j) const { return ordered_.at(j); }
  CrtPair generator_pair(std::size_t j) const;
  /// The generator mapped to Z_pq; sequence j is {0, g, 2g, ...} for this g.
  std::int64_t generator(std::size_t j) const;

  SequenceSet all() const { return SequenceSet(sequences_); }

 private:
  friend CrtFamily build_family(Construction, std::int64_t);
  CrtFamily(Construction construction, std::int64_t users, CrtContext crt)
      : construction_(construction), users_(users), crt_(crt) {}

  Construction construction_;
  std::int64_t users_;
  CrtContext crt_;
  std::vector<CharacteristicSet> sequences_;
  std::vector<std::vector<std::int64_t>> ordered_;
};

using CrtmFamily = CrtFamily;

/// Throws std::invalid_argument for M < 4.
CrtFamily build_family(Construction construction, std::int64_t users);
inline CrtFamily build_crtm(std::int64_t users) { return build_family(Construction::crtm, users); }
/// All p_M + 1 truncated sequences.
SequenceSet build_crt(std::int64_t users);

/// Picks family members by index. Throws std::out_of_range for an index above
/// p_M and std::invalid_argument for duplicates or an empty list.
SequenceSet select_users(const CrtFamily& family, std::span<const std::size_t> indices);

/// The M indices {0, 2, 3, ..., M}. Sequence 1 is the burst {0, 1, ..., M}
/// whose transmissions are contiguous, which makes its average delay close to
/// half a period; it is skipped when no explicit selection is given.
std::vector<std::size_t> default_user_selection(const CrtFamily& family);

/// The M sequences assigned to users when a scheme is named by construction.
SequenceSet default_user_set(Construction construction, std::int64_t users);

}  // namespace uiseq
