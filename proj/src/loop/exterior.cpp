#include "cext/loop/exterior.hpp"

#include "cext/error.hpp"
#include "cext/loop/forms.hpp"

namespace cext::loop {

namespace {

void check_step(double h) {
  if (!(h >= kMinStep && h <= kMaxStep)) {
    throw ArgumentError("finite-difference step must lie in [1e-4, 1e-2]");
  }
}

LoopTangent tangent_from_samples(const DiscreteLoop& base, const std::vector<Matrix>& derivative) {
  std::vector<AlgebraElement> out;
  out.reserve(base.size());
  for (std::size_t j = 0; j < base.size(); ++j) {
    out.push_back(lie::project_algebra(base[j].matrix().adjoint() * derivative[j]));
  }
  return LoopTangent(base.dim(), std::move(out));
}

}  // namespace

LoopTangent left_trivialized_tangent(const std::function<DiscreteLoop(double)>& curve, double h,
                                     DifferenceOrder order) {
  const auto base = curve(0.0);
  const auto plus = curve(h);
  const auto minus = curve(-h);
  std::vector<Matrix> d(base.size());
  if (order == DifferenceOrder::kSecond) {
    for (std::size_t j = 0; j < base.size(); ++j) {
      d[j] = (plus[j].matrix() - minus[j].matrix()) / (2.0 * h);
    }
  } else {
    const auto plus2 = curve(2.0 * h);
    const auto minus2 = curve(-2.0 * h);
    for (std::size_t j = 0; j < base.size(); ++j) {
      d[j] = (8.0 * (plus[j].matrix() - minus[j].matrix()) - (plus2[j].matrix() - minus2[j].matrix())) /
             (12.0 * h);
    }
  }
  return tangent_from_samples(base, d);
}

double d_alpha_numeric(const DiscreteLoop& g1, const DiscreteLoop& g2,
                       const std::array<LoopTangent, 2>& xi, const std::array<LoopTangent, 2>& eta,
                       double h) {
  return d_alpha_numeric(g1, g2, xi, eta, h, [](const DiscreteLoop& b, const LoopTangent& x) {
    return eval_alpha(b, x);
  });
}

double d_alpha_numeric(const DiscreteLoop& g1, const DiscreteLoop& g2,
                       const std::array<LoopTangent, 2>& xi, const std::array<LoopTangent, 2>& eta,
                       double h, const AlphaEvaluator& alpha) {
  check_step(h);
  check_compatible(g1, g2);
  for (const auto* t : {&xi[0], &xi[1], &eta[0], &eta[1]}) check_compatible(g1, *t);

  // sigma_k(s, t) = g_k exp(s xi_k + t eta_k)
  const auto sigma = [&](int k, double s, double t) {
    const auto& g = k == 0 ? g1 : g2;
    return g.times_exp(xi[static_cast<std::size_t>(k)] * s + eta[static_cast<std::size_t>(k)] * t);
  };
  // alpha(d_t sigma) at (s, 0)
  const auto alpha_dt = [&](double s) {
    const auto x1 = left_trivialized_tangent([&](double t) { return sigma(0, s, t); }, h);
    return alpha(sigma(1, s, 0.0), x1);
  };
  // alpha(d_s sigma) at (0, t)
  const auto alpha_ds = [&](double t) {
    const auto x1 = left_trivialized_tangent([&](double s) { return sigma(0, s, t); }, h);
    return alpha(sigma(1, 0.0, t), x1);
  };
  const double ds_term = (alpha_dt(h) - alpha_dt(-h)) / (2.0 * h);
  const double dt_term = (alpha_ds(h) - alpha_ds(-h)) / (2.0 * h);
  return ds_term - dt_term;
}

double d_R_numeric(const DiscreteLoop& g, const LoopTangent& x, const LoopTangent& y,
                   const LoopTangent& z, double h) {
  check_step(h);
  check_compatible(g, x);
  check_compatible(g, y);
  check_compatible(g, z);
  const auto point = [&](const std::array<double, 3>& s) {
    return g.times_exp(x * s[0] + y * s[1] + z * s[2]);
  };
  // R(d_a, d_b) at parameter s.
  const auto r_ab = [&](int a, int b, std::array<double, 3> s) {
    const auto along = [&](int axis) {
      return left_trivialized_tangent(
          [&, axis](double t) {
            auto shifted = s;
            shifted[static_cast<std::size_t>(axis)] += t;
            return point(shifted);
          },
          h);
    };
    return eval_R(along(a), along(b));
  };
  const auto partial = [&](int axis, int a, int b) {
    std::array<double, 3> plus{0.0, 0.0, 0.0}, minus{0.0, 0.0, 0.0};
    plus[static_cast<std::size_t>(axis)] = h;
    minus[static_cast<std::size_t>(axis)] = -h;
    return (r_ab(a, b, plus) - r_ab(a, b, minus)) / (2.0 * h);
  };
  return partial(0, 1, 2) - partial(1, 0, 2) + partial(2, 0, 1);
}

}  // namespace cext::loop
