#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cascade {

/// SplitMix64 pseudorandom stream. Chosen because the entire generator is a
/// few lines of 64-bit integer arithmetic, so seeds and draw sequences can be
/// reproduced bit-for-bit in any language.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), from the top 53 bits of one draw.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Unbiased uniform integer in [0, n). n must be >= 1. Uses rejection on
  /// the low residue range, so it may consume more than one raw draw.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

 private:
  std::uint64_t state_;
};

/// Seed for episode `index` of a batch: the first output of a SplitMix64
/// stream seeded with master_seed XOR index.
inline std::uint64_t derive_episode_seed(std::uint64_t master_seed, std::uint64_t index) {
  return SplitMix64(master_seed ^ index).next();
}

/// In-place Fisher-Yates shuffle, walking indices downward.
template <typename T>
void shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace cascade
