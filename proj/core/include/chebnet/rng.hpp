#pragma once

#include <cstdint>
#include <random>

namespace chebnet {

// Deterministic, platform-independent uniform draws. std::uniform_real_distribution
// is implementation-defined, so every random number in this project goes through
// the helpers below; two builds with the same seed produce the same stream.

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Independent RNG stream keyed by (seed, domain, a, b). Used to give every
/// initial-population slot, lots draw, and GA pairing its own stream so that
/// parallel evaluation cannot change results.
inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t domain,
                                   std::uint64_t a = 0, std::uint64_t b = 0) {
  std::uint64_t s = seed;
  std::uint64_t h = splitmix64(s);
  s ^= domain * 0x9E3779B97F4A7C15ull;
  h ^= splitmix64(s);
  s ^= a * 0xC2B2AE3D27D4EB4Full;
  h ^= splitmix64(s);
  s ^= b * 0x165667B19E3779F9ull;
  h ^= splitmix64(s);
  return std::mt19937_64(h);
}

/// Uniform draw in [0, 1) with 53-bit resolution.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform draw in [lo, hi).
inline double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

/// Uniform integer in [0, n). Modulo bias is negligible for n << 2^64.
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

}  // namespace chebnet
