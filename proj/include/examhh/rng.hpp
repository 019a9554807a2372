#pragma once

#include <cstdint>
#include <random>

namespace examhh {

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed for replicate `replicate` of a batch started from `base_seed`.
/// Replicate r uses splitmix64(base_seed + r * golden-gamma), so every
/// variant sees the same seed for the same replicate index.
constexpr std::uint64_t replicate_seed(std::uint64_t base_seed, std::uint64_t replicate) {
  return splitmix64(base_seed + replicate * 0x9E3779B97F4A7C15ULL);
}

}  // namespace examhh
