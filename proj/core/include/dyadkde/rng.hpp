#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace dyadkde {

//! SplitMix64 step; used to key streams and to seed Xoshiro256.
constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

//! xoshiro256** generator. Satisfies UniformRandomBitGenerator.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed) noexcept {
    std::uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64(sm);
  }

  //! Independent stream keyed by (seed, stream). Replication r of a Monte
  //! Carlo run draws from stream(seed, r) regardless of which thread runs it.
  static Xoshiro256 stream(std::uint64_t seed, std::uint64_t stream_id) noexcept {
    std::uint64_t sm = seed;
    const std::uint64_t a = splitmix64(sm);
    std::uint64_t sm2 = stream_id ^ 0xd1b54a32d192ed03ULL;
    const std::uint64_t b = splitmix64(sm2);
    return Xoshiro256(a ^ (b * 0xff51afd7ed558ccdULL));
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  //! Uniform on the open interval (0, 1) with 53 random bits.
  double uniform() noexcept {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  //! Standard normal draw by inverse-CDF transform of uniform().
  double normal() noexcept;

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> s_{};
};

}  // namespace dyadkde
