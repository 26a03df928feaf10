#pragma once

#include <cstdint>

namespace graphflow {

/// SplitMix64 (Steele/Lea/Flood mixing constants). This is the project RNG:
/// every randomized component is seeded through it and simulation trajectory
/// t draws from the stream seeded with split(seed, t), so serial and
/// parallel runs produce bit-identical results.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in {0, ..., bound-1}; rejection sampling keeps it unbiased.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t limit = ~0ULL - ~0ULL % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  int next_int(int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool next_bool(double p) { return next_unit() < p; }

  /// Derives the seed of independent stream `stream` from a master seed.
  static std::uint64_t split(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g(seed ^ (stream + 1) * 0xd1b54a32d192ed03ULL);
    return g.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace graphflow
