#pragma once

#include <cstdint>

#include "cext/lie/su.hpp"

namespace cext::lie {

/// Counter-based generator: word i of stream (seed, stream) is
/// splitmix64(key + (i + 1) * 0x9E3779B97F4A7C15) with
/// key = splitmix64(seed ^ splitmix64(stream)). Bit-identical on every
/// platform; any (seed, stream) pair can be opened independently.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Projection of a matrix with entries uniform in [-1, 1] + i[-1, 1],
/// times `scale`.
AlgebraElement random_algebra(CounterRng& rng, int n, double scale = 1.0);

/// exp of a random algebra element of scale pi.
GroupElement random_group(CounterRng& rng, int n);

}  // namespace cext::lie
