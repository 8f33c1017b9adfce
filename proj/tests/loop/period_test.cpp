#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "cext/error.hpp"
#include "cext/loop/loop_io.hpp"
#include "cext/loop/period.hpp"

using namespace cext;
using namespace cext::loop;

TEST(Period, DegenerateFamilyIsZero) {
  EXPECT_EQ(sphere_period(degenerate_sphere_family(32, 8, 8)).integral, 0.0);
}

TEST(Period, StandardFamilyIntegralIsMinusTwo) {
  // The family (u, phi, theta) covers SU(2) twice.
  const auto p = sphere_period(standard_sphere_family(128, 32, 32));
  EXPECT_NEAR(p.integral, -2.0, 1e-3);
  EXPECT_NEAR(p.over_two_pi(), -1.0 / std::numbers::pi, 1e-3);
}

TEST(Period, ReversedOrientationNegates) {
  const auto p = sphere_period(standard_sphere_family(64, 16, 16));
  const auto q = sphere_period(standard_sphere_family(64, 16, 16, true));
  EXPECT_NEAR(p.integral, -q.integral, 1e-12);
}

TEST(Period, GridConformance) {
  auto s = standard_sphere_family(32, 7, 8);
  EXPECT_THROW(sphere_period(s), ArgumentError);
  s.u_intervals = 8;
  s.phi_nodes = 0;
  EXPECT_THROW(sphere_period(s), ArgumentError);
}

TEST(LoopIo, RoundTripIsExact) {
  const auto g = random_smooth_loop(7, 3, 32, 3);
  std::stringstream s;
  write_loop(s, g);
  const auto back = read_loop(s);
  ASSERT_EQ(back.size(), g.size());
  for (std::size_t j = 0; j < g.size(); ++j) EXPECT_EQ(back[j].matrix(), g[j].matrix());
}

TEST(LoopIo, RejectsBadInput) {
  std::istringstream short_input("2 16\n1 0 0 0 0 0 1 0\n");
  EXPECT_THROW(read_loop(short_input), InputError);
  std::istringstream not_power("2 24\n");
  EXPECT_THROW(read_loop(not_power), InputError);
  std::stringstream not_unitary;
  not_unitary << "2 16\n";
  for (int j = 0; j < 16; ++j) not_unitary << "2 0 0 0 0 0 0.5 0\n";
  EXPECT_THROW(read_loop(not_unitary), InputError);
}
