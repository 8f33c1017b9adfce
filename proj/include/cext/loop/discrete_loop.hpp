#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cext/lie/su.hpp"

namespace cext::loop {

using lie::AlgebraElement;
using lie::GroupElement;
using lie::Matrix;

/// theta_j = 2 pi j / N.
double theta(std::size_t j, std::size_t samples);

class LoopTangent;

/// A smooth loop S^1 -> SU(n) sampled at theta_j = 2 pi j / N. N is a power
/// of two, at least 16. Multiplication is pointwise.
class DiscreteLoop {
 public:
  DiscreteLoop(int n, std::vector<GroupElement> samples);

  static DiscreteLoop constant(std::size_t samples, const GroupElement& g);
  static DiscreteLoop identity(int n, std::size_t samples);
  /// Samples f(theta_j).
  static DiscreteLoop from_function(int n, std::size_t samples,
                                    const std::function<GroupElement(double)>& f);

  int dim() const { return n_; }
  std::size_t size() const { return samples_.size(); }
  const GroupElement& operator[](std::size_t j) const { return samples_[j]; }
  std::span<const GroupElement> samples() const { return samples_; }

  DiscreteLoop operator*(const DiscreteLoop& o) const;
  DiscreteLoop inverse() const;
  /// theta -> g(theta) exp(t X(theta)).
  DiscreteLoop times_exp(const LoopTangent& x, double t = 1.0) const;

 private:
  int n_;
  std::vector<GroupElement> samples_;
};

/// A left-trivialized tangent vector at some loop g: the tangent of
/// t -> g exp(t X) at t = 0, stored as the su(n)-valued loop X.
class LoopTangent {
 public:
  LoopTangent(int n, std::vector<AlgebraElement> samples);

  static LoopTangent zero(int n, std::size_t samples);
  static LoopTangent constant(std::size_t samples, const AlgebraElement& x);
  static LoopTangent from_function(int n, std::size_t samples,
                                   const std::function<AlgebraElement(double)>& f);

  int dim() const { return n_; }
  std::size_t size() const { return samples_.size(); }
  const AlgebraElement& operator[](std::size_t j) const { return samples_[j]; }
  std::span<const AlgebraElement> samples() const { return samples_; }

  LoopTangent operator+(const LoopTangent& o) const;
  LoopTangent operator-(const LoopTangent& o) const;
  LoopTangent operator*(double s) const;
  friend LoopTangent operator*(double s, const LoopTangent& x) { return x * s; }

  /// Samplewise Ad(g_j) X_j.
  LoopTangent adjoint(const DiscreteLoop& g) const;

 private:
  int n_;
  std::vector<AlgebraElement> samples_;
};

/// Throws ArgumentError unless both have the same n and N.
void check_compatible(const DiscreteLoop& a, const DiscreteLoop& b);
void check_compatible(const DiscreteLoop& a, const LoopTangent& b);
void check_compatible(const LoopTangent& a, const LoopTangent& b);

/// exp(sum_{k=1..K} A_k cos k theta + B_k sin k theta) with A_k, B_k random
/// su(n) elements of scale 1/k^2. The coefficients depend only on (seed,
/// n, K), so the same seed at 2N samples gives the same smooth loop.
/// Requires K <= N/8.
DiscreteLoop random_smooth_loop(std::uint64_t seed, int n, std::size_t samples, int modes);

/// C_0 + sum_{k=1..K} (C_k cos k theta + D_k sin k theta) / k^2, random su(n)
/// coefficients; same determinism contract as random_smooth_loop.
LoopTangent random_smooth_tangent(std::uint64_t seed, int n, std::size_t samples, int modes);

}  // namespace cext::loop
