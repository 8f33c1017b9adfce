#pragma once

#include <span>
#include <vector>

#include "cext/loop/discrete_loop.hpp"

namespace cext::loop {

/// Spectral d/dtheta of an N-periodic sequence of matrices: entrywise DFT,
/// multiply mode k by ik over the centred range, Nyquist mode zeroed.
std::vector<Matrix> theta_derivative(std::span<const Matrix> samples);
std::vector<Matrix> theta_derivative(const DiscreteLoop& g);
/// The derivative of an su(n)-valued loop, projected back onto su(n).
LoopTangent theta_derivative(const LoopTangent& x);

/// Periodic trapezoid rule (2 pi / N) sum f_j.
double circle_integral(std::span<const double> f);

/// (d_theta g) g^{-1}, samplewise, projected onto su(n).
LoopTangent right_log_derivative(const DiscreteLoop& g);

}  // namespace cext::loop
