#pragma once

#include <cstdint>

namespace adamon {

// Counter-based deterministic generator (SplitMix64). Draw k of a stream with
// seed s is mix64(s + (k+1) * 0x9E3779B97F4A7C15); the full mapping from
// (seed, counter) to output is fixed here so that experiment streams are
// bit-reproducible across platforms and across serial/parallel execution.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed, std::uint64_t counter = 0)
      : seed_(seed), counter_(counter) {}

  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() {
    ++counter_;
    return mix64(seed_ + counter_ * 0x9E3779B97F4A7C15ULL);
  }

  // uniform on [0,1) with 53 random bits
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // uniform integer in [0, n) via 128-bit multiply-shift
  std::uint64_t uniform_int(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // independent substream; used to give parallel workers disjoint streams
  SplitMix64 stream(std::uint64_t k) const {
    return SplitMix64(mix64(seed_ ^ mix64(k + 0x632BE59BD9B4E019ULL)));
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

}  // namespace adamon
