#ifndef RECON_RANDOM_HPP
#define RECON_RANDOM_HPP

// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9e3779b97f4a7c15, output
// is the state passed through the mixer (x ^ x>>30) * 0xbf58476d1ce4e5b9,
// (x ^ x>>27) * 0x94d049bb133111eb, x ^ x>>31. All draws in this project go
// through this generator, so seeded results do not depend on the standard
// library's distribution implementations.

#include <cstdint>
#include <limits>

#include "recon/core.hpp"

namespace recon {

class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Independent child stream seeded from the next draw.
  Rng split() { return Rng((*this)()); }

  /// Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x;
    do {
      x = (*this)();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform in [0, 1) with 53 bits.
  double unit() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Uniform random permutation (Fisher-Yates).
Permutation random_permutation(std::size_t n, Rng& rng);

}  // namespace recon

#endif  // RECON_RANDOM_HPP
