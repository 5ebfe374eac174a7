#pragma once

#include <cstdint>

namespace zpf::rng {

/// splitmix64 finalizer. Stateless, bijective on 64 bits.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Counter-based key for (seed, index): index i uses seed XOR i.
inline constexpr std::uint64_t key(std::uint64_t seed, std::uint64_t i) {
  return mix64(seed ^ i);
}

/// Counter-based key for (seed, realization, mode). Pure function of its
/// arguments, so draws are reproducible under any parallel schedule.
inline constexpr std::uint64_t key(std::uint64_t seed, std::uint64_t realization,
                                   std::uint64_t mode) {
  return mix64(mix64(mix64(seed) ^ realization) ^ mode);
}

/// Uniform double in [0, 1) from a 64-bit key (top 53 bits).
inline constexpr double uniform01(std::uint64_t k) {
  return static_cast<double>(k >> 11) * 0x1.0p-53;
}

}  // namespace zpf::rng
