#pragma once

#include <cstdint>

namespace polarcut {

/// SplitMix64 generator. Instance generation depends on this exact recurrence
/// and on the draw order of each generator, so identical seeds reproduce
/// identical instances on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4B7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [a, b): a + (b-a) * next() / 2^64.
  double uniform(double a, double b) {
    return a + (b - a) * (static_cast<double>(next()) * 0x1.0p-64);
  }

 private:
  std::uint64_t state_;
};

}  // namespace polarcut
