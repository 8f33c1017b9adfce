#include "cext/lie/random.hpp"

#include <numbers>

namespace cext::lie {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(seed ^ splitmix64(stream))) {}

std::uint64_t CounterRng::next() {
  ++counter_;
  return splitmix64(key_ + counter_ * kGolden);
}

double CounterRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

AlgebraElement random_algebra(CounterRng& rng, int n, double scale) {
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const double re = rng.uniform(-1.0, 1.0);
      const double im = rng.uniform(-1.0, 1.0);
      m(r, c) = Complex(re, im);
    }
  }
  return project_algebra(m) * scale;
}

GroupElement random_group(CounterRng& rng, int n) {
  return exponential(random_algebra(rng, n, std::numbers::pi));
}

}  // namespace cext::lie
