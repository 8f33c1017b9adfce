#include "cext/lie/su.hpp"

#include <cmath>
#include <string>

#include "cext/error.hpp"

namespace cext::lie {

namespace {

void check_same_dim(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw ArgumentError("dimension mismatch: " + std::to_string(a.rows()) + " vs " +
                        std::to_string(b.rows()));
  }
}

void check_square(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) throw ArgumentError("matrix must be square and non-empty");
}

}  // namespace

AlgebraElement::AlgebraElement(Matrix m) : m_(std::move(m)) {
  check_square(m_);
  if (skew_residual() > kAlgebraTolerance) throw ArgumentError("matrix is not skew-Hermitian");
  if (trace_residual() > kAlgebraTolerance) throw ArgumentError("matrix is not traceless");
}

AlgebraElement AlgebraElement::zero(int n) { return AlgebraElement(Matrix::Zero(n, n), Trusted{}); }

double AlgebraElement::skew_residual() const { return (m_ + m_.adjoint()).norm(); }
double AlgebraElement::trace_residual() const { return std::abs(m_.trace()); }

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  check_same_dim(m_, o.m_);
  return AlgebraElement(m_ + o.m_, Trusted{});
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  check_same_dim(m_, o.m_);
  return AlgebraElement(m_ - o.m_, Trusted{});
}

AlgebraElement AlgebraElement::operator-() const { return AlgebraElement(-m_, Trusted{}); }

AlgebraElement AlgebraElement::operator*(double s) const { return AlgebraElement(s * m_, Trusted{}); }

GroupElement::GroupElement(Matrix m) : m_(std::move(m)) {
  check_square(m_);
  if (unitarity_residual() > kGroupTolerance) throw ArgumentError("matrix is not unitary");
  if (determinant_residual() > kGroupTolerance) throw ArgumentError("determinant is not 1");
}

GroupElement GroupElement::identity(int n) { return GroupElement(Matrix::Identity(n, n)); }

double GroupElement::unitarity_residual() const {
  return (m_.adjoint() * m_ - Matrix::Identity(m_.rows(), m_.cols())).norm();
}

double GroupElement::determinant_residual() const { return std::abs(m_.determinant() - 1.0); }

GroupElement GroupElement::operator*(const GroupElement& o) const {
  check_same_dim(m_, o.m_);
  return GroupElement(m_ * o.m_);
}

GroupElement GroupElement::inverse() const { return GroupElement(m_.adjoint()); }

double killing_form(const AlgebraElement& x, const AlgebraElement& y) {
  check_same_dim(x.matrix(), y.matrix());
  // -tr(XY) without forming the product.
  return -(x.matrix().transpose().cwiseProduct(y.matrix())).sum().real();
}

AlgebraElement adjoint(const GroupElement& g, const AlgebraElement& x) {
  check_same_dim(g.matrix(), x.matrix());
  return project_algebra(g.matrix() * x.matrix() * g.matrix().adjoint());
}

double ad_invariance_residual(const GroupElement& g, const AlgebraElement& x,
                              const AlgebraElement& y) {
  const Matrix gx = g.matrix() * x.matrix() * g.matrix().adjoint();
  const Matrix gy = g.matrix() * y.matrix() * g.matrix().adjoint();
  const double moved = -(gx * gy).trace().real();
  return std::abs(moved - killing_form(x, y));
}

GroupElement exponential(const AlgebraElement& x) {
  const int n = x.dim();
  Matrix result;
  if (n == 1) {
    result = Matrix::Identity(1, 1);
  } else if (n == 2) {
    // X^2 = -det(X) I for X in su(2).
    const double r2 = std::max(0.0, x.matrix().determinant().real());
    const double r = std::sqrt(r2);
    const double sinc = r < 1e-8 ? 1.0 - r2 / 6.0 : std::sin(r) / r;
    result = std::cos(r) * Matrix::Identity(2, 2) + sinc * x.matrix();
  } else {
    const Matrix h = Complex(0.0, 1.0) * x.matrix();
    Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
    if (eig.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
    Eigen::VectorXcd phases(n);
    for (int i = 0; i < n; ++i) phases(i) = std::exp(Complex(0.0, -eig.eigenvalues()(i)));
    result = eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
  }
  const double unitary = (result.adjoint() * result - Matrix::Identity(n, n)).norm();
  const double det = std::abs(result.determinant() - 1.0);
  if (unitary > kGroupTolerance || det > kGroupTolerance) {
    throw NumericalError("exponential left SU(n): unitarity " + std::to_string(unitary) +
                         ", determinant " + std::to_string(det));
  }
  return GroupElement(std::move(result));
}

AlgebraElement project_algebra(const Matrix& m) {
  check_square(m);
  Matrix skew = 0.5 * (m - m.adjoint());
  const Complex t = skew.trace() / static_cast<double>(m.rows());
  skew.diagonal().array() -= t;
  return AlgebraElement(std::move(skew), AlgebraElement::Trusted{});
}

}  // namespace cext::lie
