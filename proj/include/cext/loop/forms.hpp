#pragma once

#include <array>
#include <span>
#include <vector>

#include "cext/loop/discrete_loop.hpp"

// The curvature 2-form R on L(K) and the 1-form alpha on L(K) x L(K),
// both in left trivialization with <X, Y> = -tr(XY):
//
//   R(g)(gX, gY)                     = 1/(4 pi^2) int <X, d_theta Y> dtheta
//   alpha(g1, g2)(g1 X1, g2 X2)      = 1/(4 pi^2) int <X1, (d_theta g2) g2^{-1}> dtheta
//
// and the simplicial coboundary of forms delta = sum_i (-1)^i d_i^* for the
// two degrees in use (2-forms G -> G^2, 1-forms G^2 -> G^3).
namespace cext::loop {

/// R(X, Y). Independent of the base loop, which is what left invariance
/// means in left trivialization.
double eval_R(const LoopTangent& x, const LoopTangent& y);

/// R at an explicit base loop g; g is only checked for shape.
double eval_R_at(const DiscreteLoop& g, const LoopTangent& x, const LoopTangent& y);

/// alpha at (g1, g2) on (X1, X2). Depends on neither g1 nor X2.
double eval_alpha(const DiscreteLoop& g2, const LoopTangent& x1);

/// Same value, but taking the full point of G x G so callers can move g1;
/// g1 is only checked for shape.
double eval_alpha_at(const DiscreteLoop& g1, const DiscreteLoop& g2, const LoopTangent& x1);

/// A point of G^p with a tangent vector there, one left-trivialized
/// component per factor.
struct TangentPoint {
  std::vector<DiscreteLoop> loops;
  std::vector<LoopTangent> tangents;
};

/// Push a tangent vector through the face map d_i : G^(p+1) -> G^p,
/// p in {1, 2}, i in 0..p+1. Drop faces drop a factor; merging factors
/// i and i+1 gives base g_i g_{i+1} with tangent Ad(g_{i+1}^{-1}) X_i + X_{i+1}.
TangentPoint face_pushforward(int i, std::span<const DiscreteLoop> loops,
                              std::span<const LoopTangent> tangents);

/// (delta R) at (g1, g2) on xi = (X1, X2), eta = (Y1, Y2):
/// R(X2, Y2) - R(Ad(g2^-1) X1 + X2, Ad(g2^-1) Y1 + Y2) + R(X1, Y1).
double delta_form_R(const DiscreteLoop& g1, const DiscreteLoop& g2,
                    const std::array<LoopTangent, 2>& xi, const std::array<LoopTangent, 2>& eta);

/// (delta alpha) at (g1, g2, g3) on xi: alternating sum of alpha over the
/// four faces. Analytically zero, so the value is its own residual.
double delta_form_alpha(const DiscreteLoop& g1, const DiscreteLoop& g2, const DiscreteLoop& g3,
                        const std::array<LoopTangent, 3>& xi);

/// |alpha at (k g1, g2) - alpha at (g1, g2)| on the same left-trivialized
/// X1. Exactly zero through the interface.
double left_invariance_check(const DiscreteLoop& k, const DiscreteLoop& g1, const DiscreteLoop& g2,
                             const LoopTangent& x1);

/// |R at k g - R at g| on the same (X, Y). Exactly zero through the interface.
double left_invariance_check_R(const DiscreteLoop& k, const DiscreteLoop& g, const LoopTangent& x,
                               const LoopTangent& y);

/// Transport check for alpha: differentiates the curve t -> k g1 exp(t X1)
/// numerically (fourth-order stencil), left-trivializes at k g1, and
/// compares alpha there with alpha(g1, g2)(X1).
double left_invariance_fd_check(const DiscreteLoop& k, const DiscreteLoop& g1,
                                const DiscreteLoop& g2, const LoopTangent& x1, double h = 1e-3);

/// Same transport check for R.
double left_invariance_fd_check_R(const DiscreteLoop& k, const DiscreteLoop& g,
                                  const LoopTangent& x, const LoopTangent& y, double h = 1e-3);

}  // namespace cext::loop
