#pragma once

#include <cstdint>

namespace cogmet {

// splitmix64 (Steele/Lea/Vigna, published constants). Every seeded source of
// randomness in the project goes through this generator so that identical
// seeds give bit-identical results on every platform.
class Splitmix64 {
public:
  explicit constexpr Splitmix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Unbiased integer in [0, n). n must be > 0.
  constexpr std::uint64_t below(std::uint64_t n) noexcept {
    const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
    for (;;) {
      const std::uint64_t x = next();
      if (x >= threshold) return x % n;
    }
  }

  // Uniform double in [0, 1), 53 random bits.
  constexpr double unit_real() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform double in (0, 1]. Never returns exactly 0.
  constexpr double positive_unit_real() noexcept {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  // The ordinal-th output (0-based) of a stream seeded with `seed`, in O(1).
  // Equivalent to seeding Splitmix64(seed) and calling next() ordinal+1 times.
  static constexpr std::uint64_t at(std::uint64_t seed,
                                    std::uint64_t ordinal) noexcept {
    Splitmix64 g(seed + ordinal * 0x9E3779B97F4A7C15ull);
    return g.next();
  }

private:
  std::uint64_t state_;
};

} // namespace cogmet
