#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cext/error.hpp"
#include "cext/lie/random.hpp"
#include "cext/loop/calculus.hpp"
#include "cext/loop/discrete_loop.hpp"

using namespace cext;
using namespace cext::loop;
using lie::Complex;

namespace {

const Complex I(0.0, 1.0);

Matrix coroot() {
  Matrix h = Matrix::Zero(2, 2);
  h(0, 0) = I;
  h(1, 1) = -I;
  return h;
}

DiscreteLoop one_parameter(std::size_t samples) {
  return DiscreteLoop::from_function(2, samples, [](double th) {
    return lie::exponential(AlgebraElement(th * coroot()));
  });
}

// Eighth-order central difference on the periodic grid.
std::vector<Matrix> fd8(const DiscreteLoop& g) {
  static const double w[4] = {4.0 / 5, -1.0 / 5, 4.0 / 105, -1.0 / 280};
  const auto N = g.size();
  const double h = 2.0 * std::numbers::pi / static_cast<double>(N);
  std::vector<Matrix> out(N);
  for (std::size_t j = 0; j < N; ++j) {
    Matrix d = Matrix::Zero(g.dim(), g.dim());
    for (std::size_t k = 1; k <= 4; ++k) {
      d += w[k - 1] * (g[(j + k) % N].matrix() - g[(j + N - k) % N].matrix());
    }
    out[j] = d / h;
  }
  return out;
}

double max_distance(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  double worst = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) worst = std::max(worst, (a[j] - b[j]).cwiseAbs().maxCoeff());
  return worst;
}

}  // namespace

TEST(DiscreteLoop, Validation) {
  EXPECT_THROW(DiscreteLoop::identity(2, 8), ArgumentError);
  EXPECT_THROW(DiscreteLoop::identity(2, 48), ArgumentError);
  EXPECT_NO_THROW(DiscreteLoop::identity(2, 16));
  EXPECT_THROW(check_compatible(DiscreteLoop::identity(2, 16), DiscreteLoop::identity(2, 32)), ArgumentError);
  EXPECT_THROW(check_compatible(DiscreteLoop::identity(2, 16), LoopTangent::zero(3, 16)), ArgumentError);
}

TEST(ThetaDerivative, ConstantLoop) {
  lie::CounterRng rng(1, 0);
  const auto g = DiscreteLoop::constant(64, lie::random_group(rng, 3));
  for (const auto& d : theta_derivative(g)) EXPECT_LE(d.cwiseAbs().maxCoeff(), 1e-13);
}

TEST(ThetaDerivative, OneParameterSubgroup) {
  const auto d = theta_derivative(one_parameter(64));
  EXPECT_LE((d[0] - coroot()).cwiseAbs().maxCoeff(), 1e-10);
  for (std::size_t j = 0; j < 64; ++j) {
    const double th = theta(j, 64);
    Matrix expected = Matrix::Zero(2, 2);
    expected(0, 0) = I * std::exp(I * th);
    expected(1, 1) = -I * std::exp(-I * th);
    EXPECT_LE((d[j] - expected).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(ThetaDerivative, LeibnizRule) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = random_smooth_loop(seed, 2, 128, 3);
    const auto h = random_smooth_loop(seed + 100, 2, 128, 3);
    const auto dg = theta_derivative(g), dh = theta_derivative(h), dgh = theta_derivative(g * h);
    for (std::size_t j = 0; j < 128; ++j) {
      const Matrix rhs = dg[j] * h[j].matrix() + g[j].matrix() * dh[j];
      EXPECT_LE((dgh[j] - rhs).cwiseAbs().maxCoeff(), 1e-9);
    }
  }
}

TEST(ThetaDerivative, AgreesWithEighthOrderDifference) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (int n : {2, 3}) {
      const auto g = random_smooth_loop(seed, n, 1024, 3);
      EXPECT_LE(max_distance(theta_derivative(g), fd8(g)), 1e-8) << seed;
    }
  }
}

TEST(CircleIntegral, Examples) {
  const std::size_t N = 64;
  std::vector<double> one(N, 1.0), c(N), c2(N);
  for (std::size_t j = 0; j < N; ++j) {
    c[j] = std::cos(theta(j, N));
    c2[j] = c[j] * c[j];
  }
  EXPECT_NEAR(circle_integral(one), 2.0 * std::numbers::pi, 1e-14);
  EXPECT_NEAR(circle_integral(c), 0.0, 1e-13);
  EXPECT_NEAR(circle_integral(c2), std::numbers::pi, 1e-12);
}

TEST(RightLogDerivative, OneParameterSubgroupIsItsGenerator) {
  const auto r = right_log_derivative(one_parameter(64));
  for (std::size_t j = 0; j < 64; ++j) EXPECT_LE((r[j].matrix() - coroot()).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(RandomSmoothLoop, ZeroModesIsIdentity) {
  const auto g = random_smooth_loop(9, 3, 32, 0);
  for (std::size_t j = 0; j < g.size(); ++j) {
    EXPECT_EQ((g[j].matrix() - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(RandomSmoothLoop, Deterministic) {
  const auto a = random_smooth_loop(123, 2, 128, 3);
  const auto b = random_smooth_loop(123, 2, 128, 3);
  const auto c = random_smooth_loop(124, 2, 128, 3);
  bool all_equal = true, any_differs = false;
  for (std::size_t j = 0; j < 128; ++j) {
    all_equal = all_equal && a[j].matrix() == b[j].matrix();
    any_differs = any_differs || a[j].matrix() != c[j].matrix();
  }
  EXPECT_TRUE(all_equal);
  EXPECT_TRUE(any_differs);
}

TEST(RandomSmoothLoop, SameCurveAtDoubledSampling) {
  const auto a = random_smooth_loop(5, 2, 64, 3);
  const auto b = random_smooth_loop(5, 2, 128, 3);
  for (std::size_t j = 0; j < 64; ++j) {
    EXPECT_LE((a[j].matrix() - b[2 * j].matrix()).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(RandomSmoothLoop, ModeGuard) {
  EXPECT_THROW(random_smooth_loop(0, 2, 16, 3), ArgumentError);
  EXPECT_NO_THROW(random_smooth_loop(0, 2, 16, 2));
}
