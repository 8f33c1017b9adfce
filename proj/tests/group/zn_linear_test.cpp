#include <gtest/gtest.h>

#include <random>

#include "cext/group/zn_linear.hpp"

using namespace cext::group;
using namespace cext::group::zn;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, std::int64_t n) {
  Matrix a(r, c);
  std::uniform_int_distribution<std::int64_t> d(0, n - 1);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) a(i, j) = d(rng);
  }
  return a;
}

std::vector<std::int64_t> apply(const Matrix& a, const std::vector<std::int64_t>& x, std::int64_t n) {
  std::vector<std::int64_t> y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] = mod(y[i] + a(i, j) * x[j], n);
  }
  return y;
}

}  // namespace

TEST(ZnLinear, Factor) {
  const auto f = factor(72);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].value, 8);
  EXPECT_EQ(f[1].value, 9);
  EXPECT_TRUE(factor(1).empty());
  EXPECT_EQ(inverse_mod(5, 12), 5);
  EXPECT_EQ(mod(-7, 4), 1);
}

TEST(ZnLinear, KernelOrderMatchesEnumeration) {
  std::mt19937_64 rng(1);
  for (std::int64_t n : {2, 4, 6, 8, 9, 12}) {
    for (int trial = 0; trial < 8; ++trial) {
      const std::size_t r = 1 + rng() % 3, c = 1 + rng() % 3;
      const auto a = random_matrix(rng, r, c, n);
      const LinearMap map(a, n);
      std::int64_t kernel = 0, total = 1;
      for (std::size_t j = 0; j < c; ++j) total *= n;
      std::vector<std::int64_t> x(c);
      for (std::int64_t code = 0; code < total; ++code) {
        auto rest = code;
        for (auto& v : x) {
          v = rest % n;
          rest /= n;
        }
        const auto y = apply(a, x, n);
        kernel += std::all_of(y.begin(), y.end(), [](std::int64_t v) { return v == 0; });
      }
      EXPECT_EQ(map.kernel_order(), kernel) << "n=" << n;
      EXPECT_EQ(map.kernel_order() * map.image_order(), total);
      for (const auto& g : map.kernel()) {
        const auto y = apply(a, g.vector, n);
        EXPECT_TRUE(std::all_of(y.begin(), y.end(), [](std::int64_t v) { return v == 0; }));
      }
    }
  }
}

TEST(ZnLinear, SolveFindsPreimages) {
  std::mt19937_64 rng(2);
  for (std::int64_t n : {4, 6, 8}) {
    const auto a = random_matrix(rng, 4, 3, n);
    const LinearMap map(a, n, true);
    const std::vector<std::int64_t> x{1, 2, 3};
    const auto b = apply(a, x, n);
    const auto s = map.solve(b);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(apply(a, *s, n), b);
  }
}

TEST(ZnLinear, SolveRejectsNonImage) {
  Matrix a(2, 1);
  a(0, 0) = 2;
  a(1, 0) = 0;
  const LinearMap map(a, 4, true);
  EXPECT_FALSE(map.solve({1, 0}).has_value());
  EXPECT_FALSE(map.solve({0, 1}).has_value());
  EXPECT_TRUE(map.solve({2, 0}).has_value());
}

TEST(ZnLinear, SmithDiagonalIsPowersOfPrime) {
  std::mt19937_64 rng(4);
  const PrimePower ring{2, 3, 8};
  const auto a = random_matrix(rng, 5, 4, 8);
  const auto s = smith_local(a, ring, {true, false, true, false});
  ASSERT_TRUE(s.left && s.right);
  // left * a * right is diagonal with the reported entries.
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      std::int64_t v = 0;
      for (std::size_t k = 0; k < 5; ++k) {
        for (std::size_t l = 0; l < 4; ++l) v = mod(v + (*s.left)(i, k) * a(k, l) % 8 * (*s.right)(l, j), 8);
      }
      EXPECT_EQ(v, i == j ? mod(s.entry(j), 8) : 0);
    }
  }
  for (auto d : s.diagonal) EXPECT_TRUE(d == 0 || d == 1 || d == 2 || d == 4);
}
