#pragma once

#include <array>
#include <functional>

#include "cext/loop/discrete_loop.hpp"

namespace cext::loop {

inline constexpr double kDefaultStep = 1e-3;
inline constexpr double kMinStep = 1e-4;
inline constexpr double kMaxStep = 1e-2;

enum class DifferenceOrder { kSecond, kFourth };

/// project(c(0)^{-1} c'(0)) for a curve of loops, with c'(0) from a central
/// difference of the requested order.
LoopTangent left_trivialized_tangent(const std::function<DiscreteLoop(double)>& curve, double h,
                                     DifferenceOrder order = DifferenceOrder::kSecond);

/// alpha evaluated at (., g2) on first-slot tangent X1. Swappable so the
/// verification battery can be fed a deliberately corrupted alpha.
using AlphaEvaluator = std::function<double(const DiscreteLoop& g2, const LoopTangent& x1)>;

/// d(sigma^* alpha)(d_s, d_t) at 0 for the surface
/// sigma(s, t) = (g1 exp(s X1 + t Y1), g2 exp(s X2 + t Y2)):
/// d_s[alpha(d_t sigma)] - d_t[alpha(d_s sigma)], each derivative a central
/// difference of step h, inner tangents recovered from group samples.
/// Error O(h^2). h must lie in [1e-4, 1e-2].
double d_alpha_numeric(const DiscreteLoop& g1, const DiscreteLoop& g2,
                       const std::array<LoopTangent, 2>& xi, const std::array<LoopTangent, 2>& eta,
                       double h = kDefaultStep);
double d_alpha_numeric(const DiscreteLoop& g1, const DiscreteLoop& g2,
                       const std::array<LoopTangent, 2>& xi, const std::array<LoopTangent, 2>& eta,
                       double h, const AlphaEvaluator& alpha);

/// dR(d_1, d_2, d_3) at 0 for sigma(s) = g exp(s1 X + s2 Y + s3 Z):
/// d_1 R(d_2, d_3) - d_2 R(d_1, d_3) + d_3 R(d_1, d_2). Coordinate fields
/// commute, so there are no bracket terms.
double d_R_numeric(const DiscreteLoop& g, const LoopTangent& x, const LoopTangent& y,
                   const LoopTangent& z, double h = kDefaultStep);

}  // namespace cext::loop
