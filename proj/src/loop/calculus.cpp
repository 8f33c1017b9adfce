#include "cext/loop/calculus.hpp"

#include <numbers>

#include <unsupported/Eigen/FFT>

#include "cext/error.hpp"

namespace cext::loop {

std::vector<Matrix> theta_derivative(std::span<const Matrix> samples) {
  const auto count = samples.size();
  if (count == 0 || count % 2 != 0) throw ArgumentError("spectral derivative needs an even sample count");
  const auto rows = samples[0].rows(), cols = samples[0].cols();

  thread_local Eigen::FFT<double> fft;
  std::vector<lie::Complex> values(count), spectrum(count);
  std::vector<Matrix> out(count, Matrix::Zero(rows, cols));
  const auto half = count / 2;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      for (std::size_t j = 0; j < count; ++j) values[j] = samples[j](r, c);
      fft.fwd(spectrum, values);
      for (std::size_t k = 0; k < count; ++k) {
        double wave = 0.0;
        if (k < half) {
          wave = static_cast<double>(k);
        } else if (k > half) {
          wave = static_cast<double>(k) - static_cast<double>(count);
        }
        spectrum[k] *= lie::Complex(0.0, wave);
      }
      fft.inv(values, spectrum);
      for (std::size_t j = 0; j < count; ++j) out[j](r, c) = values[j];
    }
  }
  return out;
}

std::vector<Matrix> theta_derivative(const DiscreteLoop& g) {
  std::vector<Matrix> samples;
  samples.reserve(g.size());
  for (const auto& s : g.samples()) samples.push_back(s.matrix());
  return theta_derivative(samples);
}

LoopTangent theta_derivative(const LoopTangent& x) {
  std::vector<Matrix> samples;
  samples.reserve(x.size());
  for (const auto& s : x.samples()) samples.push_back(s.matrix());
  const auto d = theta_derivative(samples);
  std::vector<AlgebraElement> out;
  out.reserve(d.size());
  for (const auto& m : d) out.push_back(lie::project_algebra(m));
  return LoopTangent(x.dim(), std::move(out));
}

double circle_integral(std::span<const double> f) {
  if (f.empty()) throw ArgumentError("circle integral needs samples");
  double sum = 0.0;
  for (double v : f) sum += v;
  return 2.0 * std::numbers::pi / static_cast<double>(f.size()) * sum;
}

LoopTangent right_log_derivative(const DiscreteLoop& g) {
  const auto d = theta_derivative(g);
  std::vector<AlgebraElement> out;
  out.reserve(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    out.push_back(lie::project_algebra(d[j] * g[j].matrix().adjoint()));
  }
  return LoopTangent(g.dim(), std::move(out));
}

}  // namespace cext::loop
