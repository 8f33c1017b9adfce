#include "cext/loop/forms.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cext/error.hpp"
#include "cext/loop/calculus.hpp"
#include "cext/loop/exterior.hpp"

namespace cext::loop {

namespace {

const double kFormScale = 1.0 / (4.0 * std::numbers::pi * std::numbers::pi);

double paired_integral(const LoopTangent& x, const LoopTangent& y) {
  std::vector<double> f(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) f[j] = lie::killing_form(x[j], y[j]);
  return kFormScale * circle_integral(f);
}

void check_point(std::span<const DiscreteLoop> loops, std::span<const LoopTangent> tangents) {
  if (loops.size() != tangents.size()) throw ArgumentError("one tangent component per factor");
  for (std::size_t i = 0; i < loops.size(); ++i) {
    check_compatible(loops[i], tangents[i]);
    if (i) check_compatible(loops[0], loops[i]);
  }
}

}  // namespace

double eval_R(const LoopTangent& x, const LoopTangent& y) {
  check_compatible(x, y);
  return paired_integral(x, theta_derivative(y));
}

double eval_R_at(const DiscreteLoop& g, const LoopTangent& x, const LoopTangent& y) {
  check_compatible(g, x);
  return eval_R(x, y);
}

double eval_alpha(const DiscreteLoop& g2, const LoopTangent& x1) {
  check_compatible(g2, x1);
  return paired_integral(x1, right_log_derivative(g2));
}

double eval_alpha_at(const DiscreteLoop& g1, const DiscreteLoop& g2, const LoopTangent& x1) {
  check_compatible(g1, g2);
  return eval_alpha(g2, x1);
}

TangentPoint face_pushforward(int i, std::span<const DiscreteLoop> loops,
                              std::span<const LoopTangent> tangents) {
  check_point(loops, tangents);
  const auto factors = static_cast<int>(loops.size());
  const int p = factors - 1;
  if (p < 1 || p > 2) throw ArgumentError("face pushforward is implemented for G^2 and G^3");
  if (i < 0 || i > p + 1) {
    throw ArgumentError("face index " + std::to_string(i) + " outside 0.." + std::to_string(p + 1));
  }
  TangentPoint out;
  for (int k = 0; k < factors; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    if (i == 0 && k == 0) continue;
    if (i == p + 1 && k == p) continue;
    if (i >= 1 && i <= p && k == i - 1) {
      // Merge factors k and k+1.
      const auto& next = loops[uk + 1];
      out.loops.push_back(loops[uk] * next);
      out.tangents.push_back(tangents[uk].adjoint(next.inverse()) + tangents[uk + 1]);
      ++k;
      continue;
    }
    out.loops.push_back(loops[uk]);
    out.tangents.push_back(tangents[uk]);
  }
  return out;
}

double delta_form_R(const DiscreteLoop& g1, const DiscreteLoop& g2,
                    const std::array<LoopTangent, 2>& xi, const std::array<LoopTangent, 2>& eta) {
  const std::array<DiscreteLoop, 2> loops{g1, g2};
  check_point(loops, xi);
  check_point(loops, eta);
  double sum = 0.0;
  for (int i = 0; i <= 2; ++i) {
    const auto a = face_pushforward(i, loops, xi);
    const auto b = face_pushforward(i, loops, eta);
    const double value = eval_R(a.tangents[0], b.tangents[0]);
    sum += (i % 2 == 0) ? value : -value;
  }
  return sum;
}

double delta_form_alpha(const DiscreteLoop& g1, const DiscreteLoop& g2, const DiscreteLoop& g3,
                        const std::array<LoopTangent, 3>& xi) {
  const std::array<DiscreteLoop, 3> loops{g1, g2, g3};
  double sum = 0.0;
  for (int i = 0; i <= 3; ++i) {
    const auto face = face_pushforward(i, loops, xi);
    const double value = eval_alpha_at(face.loops[0], face.loops[1], face.tangents[0]);
    sum += (i % 2 == 0) ? value : -value;
  }
  return sum;
}

double left_invariance_check(const DiscreteLoop& k, const DiscreteLoop& g1, const DiscreteLoop& g2,
                             const LoopTangent& x1) {
  return std::abs(eval_alpha_at(k * g1, g2, x1) - eval_alpha_at(g1, g2, x1));
}

double left_invariance_check_R(const DiscreteLoop& k, const DiscreteLoop& g, const LoopTangent& x,
                               const LoopTangent& y) {
  return std::abs(eval_R_at(k * g, x, y) - eval_R_at(g, x, y));
}

double left_invariance_fd_check(const DiscreteLoop& k, const DiscreteLoop& g1,
                                const DiscreteLoop& g2, const LoopTangent& x1, double h) {
  const auto moved = k * g1;
  const auto transported = left_trivialized_tangent(
      [&](double t) { return k * g1.times_exp(x1, t); }, h, DifferenceOrder::kFourth);
  return std::abs(eval_alpha_at(moved, g2, transported) - eval_alpha_at(g1, g2, x1));
}

double left_invariance_fd_check_R(const DiscreteLoop& k, const DiscreteLoop& g,
                                  const LoopTangent& x, const LoopTangent& y, double h) {
  const auto tx = left_trivialized_tangent([&](double t) { return k * g.times_exp(x, t); }, h,
                                           DifferenceOrder::kFourth);
  const auto ty = left_trivialized_tangent([&](double t) { return k * g.times_exp(y, t); }, h,
                                           DifferenceOrder::kFourth);
  return std::abs(eval_R(tx, ty) - eval_R(x, y));
}

}  // namespace cext::loop
