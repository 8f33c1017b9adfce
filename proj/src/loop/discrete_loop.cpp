#include "cext/loop/discrete_loop.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cext/error.hpp"
#include "cext/lie/random.hpp"

namespace cext::loop {

namespace {

void check_sample_count(std::size_t samples) {
  if (samples < 16 || (samples & (samples - 1)) != 0) {
    throw ArgumentError("sample count must be a power of two >= 16, got " + std::to_string(samples));
  }
}

// Streams keep loop and tangent coefficients independent for equal seeds.
constexpr std::uint64_t kLoopStream = 0x6c6f6f70;     // "loop"
constexpr std::uint64_t kTangentStream = 0x74616e67;  // "tang"

std::vector<AlgebraElement> fourier_coefficients(lie::CounterRng& rng, int n, int modes,
                                                 bool with_constant) {
  std::vector<AlgebraElement> coeffs;
  if (with_constant) coeffs.push_back(lie::random_algebra(rng, n));
  for (int k = 1; k <= modes; ++k) {
    const double scale = 1.0 / (static_cast<double>(k) * k);
    coeffs.push_back(lie::random_algebra(rng, n, scale));  // cos
    coeffs.push_back(lie::random_algebra(rng, n, scale));  // sin
  }
  return coeffs;
}

AlgebraElement fourier_sum(const std::vector<AlgebraElement>& coeffs, int n, int modes,
                           bool with_constant, double th) {
  Matrix sum = Matrix::Zero(n, n);
  std::size_t idx = 0;
  if (with_constant) sum += coeffs[idx++].matrix();
  for (int k = 1; k <= modes; ++k) {
    sum += std::cos(k * th) * coeffs[idx++].matrix();
    sum += std::sin(k * th) * coeffs[idx++].matrix();
  }
  return lie::project_algebra(sum);
}

void check_modes(int modes, std::size_t samples) {
  if (modes < 0 || static_cast<std::size_t>(modes) > samples / 8) {
    throw ArgumentError("mode count must lie in 0..N/8");
  }
}

}  // namespace

double theta(std::size_t j, std::size_t samples) {
  return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples);
}

DiscreteLoop::DiscreteLoop(int n, std::vector<GroupElement> samples)
    : n_(n), samples_(std::move(samples)) {
  check_sample_count(samples_.size());
  for (const auto& g : samples_) {
    if (g.dim() != n_) throw ArgumentError("loop sample has the wrong dimension");
  }
}

DiscreteLoop DiscreteLoop::constant(std::size_t samples, const GroupElement& g) {
  return DiscreteLoop(g.dim(), std::vector<GroupElement>(samples, g));
}

DiscreteLoop DiscreteLoop::identity(int n, std::size_t samples) {
  return constant(samples, GroupElement::identity(n));
}

DiscreteLoop DiscreteLoop::from_function(int n, std::size_t samples,
                                         const std::function<GroupElement(double)>& f) {
  check_sample_count(samples);
  std::vector<GroupElement> out;
  out.reserve(samples);
  for (std::size_t j = 0; j < samples; ++j) out.push_back(f(theta(j, samples)));
  return DiscreteLoop(n, std::move(out));
}

DiscreteLoop DiscreteLoop::operator*(const DiscreteLoop& o) const {
  check_compatible(*this, o);
  std::vector<GroupElement> out;
  out.reserve(size());
  for (std::size_t j = 0; j < size(); ++j) out.push_back(samples_[j] * o.samples_[j]);
  return DiscreteLoop(n_, std::move(out));
}

DiscreteLoop DiscreteLoop::inverse() const {
  std::vector<GroupElement> out;
  out.reserve(size());
  for (const auto& g : samples_) out.push_back(g.inverse());
  return DiscreteLoop(n_, std::move(out));
}

DiscreteLoop DiscreteLoop::times_exp(const LoopTangent& x, double t) const {
  check_compatible(*this, x);
  std::vector<GroupElement> out;
  out.reserve(size());
  for (std::size_t j = 0; j < size(); ++j) out.push_back(samples_[j] * lie::exponential(x[j] * t));
  return DiscreteLoop(n_, std::move(out));
}

LoopTangent::LoopTangent(int n, std::vector<AlgebraElement> samples)
    : n_(n), samples_(std::move(samples)) {
  check_sample_count(samples_.size());
  for (const auto& x : samples_) {
    if (x.dim() != n_) throw ArgumentError("tangent sample has the wrong dimension");
  }
}

LoopTangent LoopTangent::zero(int n, std::size_t samples) {
  return constant(samples, AlgebraElement::zero(n));
}

LoopTangent LoopTangent::constant(std::size_t samples, const AlgebraElement& x) {
  return LoopTangent(x.dim(), std::vector<AlgebraElement>(samples, x));
}

LoopTangent LoopTangent::from_function(int n, std::size_t samples,
                                       const std::function<AlgebraElement(double)>& f) {
  check_sample_count(samples);
  std::vector<AlgebraElement> out;
  out.reserve(samples);
  for (std::size_t j = 0; j < samples; ++j) out.push_back(f(theta(j, samples)));
  return LoopTangent(n, std::move(out));
}

LoopTangent LoopTangent::operator+(const LoopTangent& o) const {
  check_compatible(*this, o);
  std::vector<AlgebraElement> out;
  out.reserve(size());
  for (std::size_t j = 0; j < size(); ++j) out.push_back(samples_[j] + o.samples_[j]);
  return LoopTangent(n_, std::move(out));
}

LoopTangent LoopTangent::operator-(const LoopTangent& o) const {
  check_compatible(*this, o);
  std::vector<AlgebraElement> out;
  out.reserve(size());
  for (std::size_t j = 0; j < size(); ++j) out.push_back(samples_[j] - o.samples_[j]);
  return LoopTangent(n_, std::move(out));
}

LoopTangent LoopTangent::operator*(double s) const {
  std::vector<AlgebraElement> out;
  out.reserve(size());
  for (const auto& x : samples_) out.push_back(x * s);
  return LoopTangent(n_, std::move(out));
}

LoopTangent LoopTangent::adjoint(const DiscreteLoop& g) const {
  check_compatible(g, *this);
  std::vector<AlgebraElement> out;
  out.reserve(size());
  for (std::size_t j = 0; j < size(); ++j) out.push_back(lie::adjoint(g[j], samples_[j]));
  return LoopTangent(n_, std::move(out));
}

void check_compatible(const DiscreteLoop& a, const DiscreteLoop& b) {
  if (a.dim() != b.dim() || a.size() != b.size()) {
    throw ArgumentError("loops differ in dimension or sample count");
  }
}

void check_compatible(const DiscreteLoop& a, const LoopTangent& b) {
  if (a.dim() != b.dim() || a.size() != b.size()) {
    throw ArgumentError("loop and tangent differ in dimension or sample count");
  }
}

void check_compatible(const LoopTangent& a, const LoopTangent& b) {
  if (a.dim() != b.dim() || a.size() != b.size()) {
    throw ArgumentError("tangents differ in dimension or sample count");
  }
}

DiscreteLoop random_smooth_loop(std::uint64_t seed, int n, std::size_t samples, int modes) {
  check_sample_count(samples);
  check_modes(modes, samples);
  lie::CounterRng rng(seed, kLoopStream);
  const auto coeffs = fourier_coefficients(rng, n, modes, false);
  return DiscreteLoop::from_function(n, samples, [&](double th) {
    return lie::exponential(fourier_sum(coeffs, n, modes, false, th));
  });
}

LoopTangent random_smooth_tangent(std::uint64_t seed, int n, std::size_t samples, int modes) {
  check_sample_count(samples);
  check_modes(modes, samples);
  lie::CounterRng rng(seed, kTangentStream);
  const auto coeffs = fourier_coefficients(rng, n, modes, true);
  return LoopTangent::from_function(n, samples, [&](double th) {
    return fourier_sum(coeffs, n, modes, true, th);
  });
}

}  // namespace cext::loop
