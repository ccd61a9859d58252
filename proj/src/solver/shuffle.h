#pragma once

/// @file
/// @brief Deterministic, platform-stable shuffling.

#include <cstdint>
#include <utility>
#include <vector>

namespace cantus {

/// SplitMix64: a tiny 64-bit generator with well-mixed output. Chosen for
/// byte-identical behavior across platforms and standard libraries
/// (std::shuffle and std::mt19937 distributions make no such promise).
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
};

/// @brief A generator for an independent stream derived from (seed, stream).
///
/// Each solver cell shuffles its domain with its own stream id, so value
/// orders at different cells are decorrelated under a single seed.
SplitMix64 streamRng(std::uint64_t seed, std::uint64_t stream);

/// @brief Deterministic Fisher-Yates shuffle of ``values`` under
/// (seed, stream).
template <typename T>
std::vector<T> seededShuffle(std::vector<T> values, std::uint64_t seed,
                             std::uint64_t stream) {
  SplitMix64 rng = streamRng(seed, stream);
  for (std::size_t i = values.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.next() % i);
    std::swap(values[i - 1], values[j]);
  }
  return values;
}

}  // namespace cantus
