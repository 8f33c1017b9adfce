#pragma once

#include <cstddef>
#include <functional>

#include "cext/loop/discrete_loop.hpp"

namespace cext::loop {

/// A two-parameter family of loops over the rectangle
/// [u_min, u_max] x [phi_min, phi_min + phi_span), periodic in phi.
/// Integration uses Simpson in u (u_intervals must be even) and the
/// periodic trapezoid rule on phi_nodes nodes in phi.
struct LoopSurface {
  std::function<DiscreteLoop(double u, double phi)> generator;
  double u_min = 0.0;
  double u_max = 0.0;
  double phi_min = 0.0;
  double phi_span = 0.0;
  std::size_t u_intervals = 0;
  std::size_t phi_nodes = 0;
};

/// The based loops theta -> exp(theta i nu(u, phi) . sigma) in SU(2),
/// nu the unit vector with polar angle u and azimuth phi. With `reversed`,
/// phi runs backwards. The map (u, phi, theta) -> SU(2) covers S^3 twice.
LoopSurface standard_sphere_family(std::size_t samples, std::size_t u_intervals,
                                   std::size_t phi_nodes, bool reversed = false);

/// Same grid, every loop the constant identity.
LoopSurface degenerate_sphere_family(std::size_t samples, std::size_t u_intervals,
                                     std::size_t phi_nodes);

struct Period {
  /// The integral of R over the surface (R real-valued).
  double integral = 0.0;
  double over_two_pi() const;
};

/// Pulls R back to the parameter rectangle and integrates. Tangents d_u,
/// d_phi come from central differences of step `tangent_step`, left
/// trivialized and projected.
Period sphere_period(const LoopSurface& surface, double tangent_step = 1e-5);

}  // namespace cext::loop
