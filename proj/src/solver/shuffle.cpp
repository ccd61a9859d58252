/// @file
/// @brief Deterministic shuffling.

#include "solver/shuffle.h"

namespace cantus {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kStreamSalt = 0xD1B54A32D192ED03ULL;

}  // namespace

std::uint64_t SplitMix64::next() {
  state += kGolden;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SplitMix64 streamRng(std::uint64_t seed, std::uint64_t stream) {
  // Run the seed through one mixing round before salting with the stream id,
  // so that nearby seeds (1, 2, 3, ...) still produce unrelated streams.
  SplitMix64 seeder(seed);
  std::uint64_t mixed = seeder.next();
  return SplitMix64(mixed ^ (kStreamSalt * (stream + 1)));
}

}  // namespace cantus
