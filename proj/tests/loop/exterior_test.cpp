#include <gtest/gtest.h>

#include <cmath>

#include "cext/error.hpp"
#include "cext/lie/random.hpp"
#include "cext/loop/exterior.hpp"
#include "cext/loop/forms.hpp"

using namespace cext;
using namespace cext::loop;

namespace {

constexpr std::size_t N = 128;
LoopTangent some_tangent(std::uint64_t seed, int n = 2) { return random_smooth_tangent(seed, n, N, 3); }
DiscreteLoop some_loop(std::uint64_t seed, int n = 2) { return random_smooth_loop(seed, n, N, 3); }

}  // namespace

TEST(DAlpha, ZeroTangents) {
  const auto z = LoopTangent::zero(2, N);
  EXPECT_EQ(d_alpha_numeric(some_loop(1), some_loop(2), {z, z}, {z, z}), 0.0);
}

TEST(DAlpha, RepeatedDirectionVanishes) {
  const std::array<LoopTangent, 2> xi{some_tangent(3), some_tangent(4)};
  EXPECT_LE(std::abs(d_alpha_numeric(some_loop(1), some_loop(2), xi, xi)), 1e-9);
}

TEST(DAlpha, StepGuard) {
  const auto z = LoopTangent::zero(2, N);
  EXPECT_THROW(d_alpha_numeric(some_loop(1), some_loop(2), {z, z}, {z, z}, 1e-5), ArgumentError);
  EXPECT_THROW(d_alpha_numeric(some_loop(1), some_loop(2), {z, z}, {z, z}, 0.1), ArgumentError);
}

TEST(DAlpha, MatchesDeltaR) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    for (int n : {2, 3}) {
      const auto g1 = some_loop(6 * s, n), g2 = some_loop(6 * s + 1, n);
      const std::array<LoopTangent, 2> xi{some_tangent(6 * s + 2, n), some_tangent(6 * s + 3, n)};
      const std::array<LoopTangent, 2> eta{some_tangent(6 * s + 4, n), some_tangent(6 * s + 5, n)};
      const double dr = delta_form_R(g1, g2, xi, eta);
      const double da = d_alpha_numeric(g1, g2, xi, eta);
      EXPECT_LE(std::abs(dr - da), 5e-5 * (1.0 + std::abs(dr)));
    }
  }
}

TEST(DAlpha, SecondOrderConvergence) {
  const auto g1 = some_loop(1), g2 = some_loop(2);
  const std::array<LoopTangent, 2> xi{some_tangent(3), some_tangent(4)};
  const std::array<LoopTangent, 2> eta{some_tangent(5), some_tangent(6)};
  const double dr = delta_form_R(g1, g2, xi, eta);
  const double e1 = std::abs(dr - d_alpha_numeric(g1, g2, xi, eta, 2e-3));
  const double e2 = std::abs(dr - d_alpha_numeric(g1, g2, xi, eta, 1e-3));
  EXPECT_GT(e1 / e2, 3.0);
  EXPECT_LT(e1 / e2, 5.0);
}

TEST(DAlpha, NegatedAlphaIsCaught) {
  const auto g1 = some_loop(1), g2 = some_loop(2);
  const std::array<LoopTangent, 2> xi{some_tangent(3), some_tangent(4)};
  const std::array<LoopTangent, 2> eta{some_tangent(5), some_tangent(6)};
  const double dr = delta_form_R(g1, g2, xi, eta);
  const double bad = d_alpha_numeric(g1, g2, xi, eta, 1e-3,
                                     [](const DiscreteLoop& g, const LoopTangent& x) { return -eval_alpha(g, x); });
  EXPECT_GT(std::abs(dr - bad), 1e-3 * (1.0 + std::abs(dr)));
}

TEST(DR, ConstantTangentsAtIdentity) {
  lie::CounterRng rng(1, 0);
  const auto e = DiscreteLoop::identity(2, N);
  const auto x = LoopTangent::constant(N, lie::random_algebra(rng, 2));
  const auto y = LoopTangent::constant(N, lie::random_algebra(rng, 2));
  const auto z = LoopTangent::constant(N, lie::random_algebra(rng, 2));
  EXPECT_LE(std::abs(d_R_numeric(e, x, y, z)), 1e-6);
}

TEST(DR, RepeatedTangent) {
  const auto x = some_tangent(1), y = some_tangent(2);
  EXPECT_LE(std::abs(d_R_numeric(some_loop(3), x, x, y)), 1e-5);
}

TEST(DR, ClosedOnRandomInputs) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    EXPECT_LE(std::abs(d_R_numeric(some_loop(4 * s), some_tangent(4 * s + 1), some_tangent(4 * s + 2), some_tangent(4 * s + 3))), 1e-5);
  }
}

TEST(LeftTrivializedTangent, RecoversDirection) {
  const auto g = some_loop(1);
  const auto x = some_tangent(2);
  const auto t2 = left_trivialized_tangent([&](double t) { return g.times_exp(x, t); }, 1e-3);
  const auto t4 = left_trivialized_tangent([&](double t) { return g.times_exp(x, t); }, 1e-3,
                                           DifferenceOrder::kFourth);
  double e2 = 0.0, e4 = 0.0;
  for (std::size_t j = 0; j < N; ++j) {
    e2 = std::max(e2, (t2[j].matrix() - x[j].matrix()).cwiseAbs().maxCoeff());
    e4 = std::max(e4, (t4[j].matrix() - x[j].matrix()).cwiseAbs().maxCoeff());
  }
  EXPECT_LE(e2, 1e-6);
  EXPECT_LE(e4, 1e-10);
}
