#include "cext/loop/period.hpp"

#include <cmath>
#include <numbers>

#include "cext/error.hpp"
#include "cext/loop/exterior.hpp"
#include "cext/loop/forms.hpp"

namespace cext::loop {

namespace {

using lie::Complex;

Matrix pauli_combination(double x, double y, double z) {
  Matrix s(2, 2);
  s << Complex(z, 0.0), Complex(x, -y), Complex(x, y), Complex(-z, 0.0);
  return s;
}

void check_grid(const LoopSurface& surface) {
  if (!surface.generator) throw ArgumentError("loop surface has no generator");
  if (surface.u_intervals < 2 || surface.u_intervals % 2 != 0) {
    throw ArgumentError("Simpson's rule in u needs an even number of intervals");
  }
  if (surface.phi_nodes < 1) throw ArgumentError("phi grid must have nodes");
  if (!(surface.u_max > surface.u_min) || !(surface.phi_span > 0.0)) {
    throw ArgumentError("parameter rectangle is empty");
  }
}

}  // namespace

double Period::over_two_pi() const { return integral / (2.0 * std::numbers::pi); }

LoopSurface standard_sphere_family(std::size_t samples, std::size_t u_intervals,
                                   std::size_t phi_nodes, bool reversed) {
  LoopSurface surface;
  const double sign = reversed ? -1.0 : 1.0;
  surface.generator = [samples, sign](double u, double phi) {
    const double a = sign * phi;
    const Matrix s = pauli_combination(std::sin(u) * std::cos(a), std::sin(u) * std::sin(a), std::cos(u));
    return DiscreteLoop::from_function(2, samples, [&](double th) {
      // exp(theta i nu.sigma) = cos(theta) I + i sin(theta) nu.sigma
      const Matrix g = std::cos(th) * Matrix::Identity(2, 2) + Complex(0.0, std::sin(th)) * s;
      return GroupElement(g);
    });
  };
  surface.u_min = 0.0;
  surface.u_max = std::numbers::pi;
  surface.phi_min = 0.0;
  surface.phi_span = 2.0 * std::numbers::pi;
  surface.u_intervals = u_intervals;
  surface.phi_nodes = phi_nodes;
  return surface;
}

LoopSurface degenerate_sphere_family(std::size_t samples, std::size_t u_intervals,
                                     std::size_t phi_nodes) {
  auto surface = standard_sphere_family(samples, u_intervals, phi_nodes);
  surface.generator = [samples](double, double) { return DiscreteLoop::identity(2, samples); };
  return surface;
}

Period sphere_period(const LoopSurface& surface, double tangent_step) {
  check_grid(surface);
  const double du = (surface.u_max - surface.u_min) / static_cast<double>(surface.u_intervals);
  const double dphi = surface.phi_span / static_cast<double>(surface.phi_nodes);

  // Row sums in a fixed order keep the result reproducible bit for bit.
  double total = 0.0;
  for (std::size_t a = 0; a <= surface.u_intervals; ++a) {
    const double u = surface.u_min + du * static_cast<double>(a);
    const double simpson = (a == 0 || a == surface.u_intervals) ? 1.0 : (a % 2 == 1 ? 4.0 : 2.0);
    double row = 0.0;
    for (std::size_t b = 0; b < surface.phi_nodes; ++b) {
      const double phi = surface.phi_min + dphi * static_cast<double>(b);
      const auto tu = left_trivialized_tangent(
          [&](double t) { return surface.generator(u + t, phi); }, tangent_step);
      const auto tphi = left_trivialized_tangent(
          [&](double t) { return surface.generator(u, phi + t); }, tangent_step);
      row += eval_R(tu, tphi);
    }
    total += simpson * row;
  }
  return Period{total * (du / 3.0) * dphi};
}

}  // namespace cext::loop
