#pragma once

#include <cstdint>

namespace planeguard {

// Hand-rolled splitmix64 stream: the sweep's byte-identical-output guarantee
// must not depend on standard-library distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Uniform integer in [lo, hi].
  std::uint64_t uniform_index(std::uint64_t lo, std::uint64_t hi) {
    return lo + next_u64() % (hi - lo + 1);
  }

  /// Child stream for item `index`; independent of draw order elsewhere.
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    Rng mix(seed ^ (0xA24BAED4963EE407ull + index * 0x9E3779B97F4A7C15ull));
    return Rng(mix.next_u64());
  }

 private:
  std::uint64_t state_;
};

}  // namespace planeguard
