#pragma once

#include <cstdint>

namespace uiseq {

/// Element (a, b) of Z_p x Z_q.
struct CrtPair {
  std::int64_t a;
  std::int64_t b;
  friend bool operator==(const CrtPair&, const CrtPair&) = default;
};

/// The ring isomorphism Z_pq -> Z_p x Z_q, x -> (x mod p, x mod q), with the
/// inverse coefficient precomputed once per (p, q).
class CrtContext {
 public:
  /// Throws std::invalid_argument unless p, q >= 1, gcd(p, q) == 1 and pq < 2^62.
  CrtContext(std::int64_t p, std::int64_t q);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  std::int64_t modulus() const noexcept { return p_ * q_; }

  /// Requires 0 <= x < pq (std::out_of_range otherwise).
  CrtPair forward(std::int64_t x) const;
  /// Components are reduced first, so any integers are accepted.
  std::int64_t inverse(CrtPair pair) const noexcept;

 private:
  std::int64_t p_;
  std::int64_t q_;
  std::int64_t q_inv_mod_p_;
};

CrtPair crt_forward(std::int64_t x, std::int64_t p, std::int64_t q);
std::int64_t crt_inverse(CrtPair pair, std::int64_t p, std::int64_t q);

}  // namespace uiseq
