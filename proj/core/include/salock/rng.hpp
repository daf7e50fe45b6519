#pragma once

#include <cstdint>

namespace salock::rng {

// splitmix64 (Steele/Lea/Flood; Vigna's fixed-increment variant).
// Chosen for replication streams because the whole generator is three
// published constants, so any other implementation can reproduce a run
// from (master seed, replication index) alone.
inline constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
inline constexpr std::uint64_t kMix1 = 0xBF58476D1CE4E5B9ULL;
inline constexpr std::uint64_t kMix2 = 0x94D049BB133111EBULL;

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += kGamma);
    z = (z ^ (z >> 30)) * kMix1;
    z = (z ^ (z >> 27)) * kMix2;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

/// Seed of the `index`-th derived stream: the (index+1)-th output of a
/// splitmix64 sequence started at `master`. O(1) and order-independent.
inline std::uint64_t derive_stream(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + (index + 1) * kGamma;
  z = (z ^ (z >> 30)) * kMix1;
  z = (z ^ (z >> 27)) * kMix2;
  return z ^ (z >> 31);
}

}  // namespace salock::rng
