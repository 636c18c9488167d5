#pragma once

// Portable pseudo-random generation.
//
// The library never uses <random> distributions, whose output differs across
// standard library implementations. Every random quantity derives from
// xoshiro256** (Blackman & Vigna), seeded through SplitMix64, with our own
// uniform-double and bounded-integer transforms. Identical seeds therefore
// yield bit-identical streams on every platform.
//
// Per-trial streams: trial i of an experiment with master seed s uses the
// 64-bit seed
//
//     trial_seed(s, i) = splitmix64_mix(s + (i + 1) * 0x9E3779B97F4A7C15)
//
// i.e. the (i+1)-th output of a SplitMix64 generator started at s. Trial
// results depend only on (s, i), never on scheduling.

#include <cstdint>
#include <limits>

namespace fatpivot {

using Seed = std::uint64_t;

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit constexpr SplitMix64(std::uint64_t state) noexcept : state_(state) {}
  constexpr result_type operator()() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return splitmix64_mix(state_);
  }
  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

 private:
  std::uint64_t state_;
};

constexpr Seed trial_seed(Seed master, std::uint64_t trial_index) noexcept {
  return splitmix64_mix(master + (trial_index + 1) * 0x9E3779B97F4A7C15ULL);
}

/// xoshiro256** 1.0, state filled from SplitMix64(seed).
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit constexpr Rng(Seed seed) noexcept {
    SplitMix64 sm(seed);
    for (auto& s : s_) s = sm();
  }

  constexpr result_type operator()() noexcept {
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

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Unbiased integer in [0, bound); bound must be positive (Lemire's method).
  std::uint64_t below(std::uint64_t bound) noexcept {
    unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>((*this)()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4]{};
};

}  // namespace fatpivot
