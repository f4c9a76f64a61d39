#include "uiseq/crt.hpp"

#include <numeric>
#include <stdexcept>

#include "uiseq/residue.hpp"

namespace uiseq {

CrtContext::CrtContext(std::int64_t p, std::int64_t q) : p_(p), q_(q), q_inv_mod_p_(0) {
  if (p < 1 || q < 1) throw std::invalid_argument("crt: moduli must be positive");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("crt: moduli are not coprime");
  if (p > (std::int64_t{1} << 62) / q) throw std::invalid_argument("crt: modulus too large");
  q_inv_mod_p_ = p == 1 ? 0 : mod_inverse(q, p);
}

CrtPair CrtContext::forward(std::int64_t x) const {
  if (x < 0 || x >= modulus()) throw std::out_of_range("crt: residue outside [0, pq)");
  return {x % p_, x % q_};
}

std::int64_t CrtContext::inverse(CrtPair pair) const noexcept {
  // Garner: x = b + q * ((a - b) * q^{-1} mod p); every product stays below p^2.
  const std::int64_t a = mod_reduce(pair.a, p_);
  const std::int64_t b = mod_reduce(pair.b, q_);
  const std::int64_t t = mod_reduce(mod_reduce(a - b, p_) * q_inv_mod_p_, p_);
  return b + q_ * t;
}

CrtPair crt_forward(std::int64_t x, std::int64_t p, std::int64_t q) {
  return CrtContext(p, q).forward(x);
}

std::int64_t crt_inverse(CrtPair pair, std::int64_t p, std::int64_t q) {
  return CrtContext(p, q).inverse(pair);
}

}  // namespace uiseq
