#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string_view>

namespace uiseq {

/// Identity recorded in run manifests.
inline constexpr std::string_view rng_identity =
    "xoshiro256** per sample, state expanded by splitmix64 from "
    "mix64(master_seed ^ mix64(sample_index + 0x9e3779b97f4a7c15))";

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of the independent stream for one sample; depends only on
/// (master_seed, sample_index), never on which worker runs the sample.
constexpr std::uint64_t substream_seed(std::uint64_t master_seed, std::uint64_t sample_index) noexcept {
  return mix64(master_seed ^ mix64(sample_index + 0x9e3779b97f4a7c15ULL));
}

/// xoshiro256** (Blackman and Vigna). Satisfies UniformRandomBitGenerator.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr Xoshiro256(std::uint64_t seed) noexcept {
    for (auto& word : state_) {
      seed += 0x9e3779b97f4a7c15ULL;
      word = mix64(seed);
    }
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

  std::array<std::uint64_t, 4> state_{};
};

/// Unbiased integer in [0, n), n >= 1 (Lemire's multiply-and-reject).
template <typename Rng>
std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  __extension__ using u128 = unsigned __int128;
  u128 product = static_cast<u128>(rng()) * n;
  auto low = static_cast<std::uint64_t>(product);
  if (low < n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      product = static_cast<u128>(rng()) * n;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

/// Uniform double in [0, 1) with 53 random bits.
template <typename Rng>
double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace uiseq
