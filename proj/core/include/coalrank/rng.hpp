#pragma once

#include <cstdint>

namespace coalrank {

/// splitmix64 stream. Self-contained so fuzz traces are byte-identical
/// across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  /// Uniform-ish value in [lo, hi], inclusive.
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() & 1u) != 0; }

  /// Derives an independent stream for one fuzz iteration.
  static std::uint64_t substream(std::uint64_t seed, std::uint64_t index) {
    Rng mixer(seed ^ (0xD1B54A32D192ED03ull * (index + 1)));
    return mixer.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace coalrank
