#pragma once

#include <complex>

#include <Eigen/Dense>

// Numerical kernel for K = SU(n) and its Lie algebra su(n), in the
// defining representation, double precision, dense storage.
namespace cext::lie {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Unitarity and determinant tolerance for group elements.
inline constexpr double kGroupTolerance = 1e-10;
/// Skew-Hermitian and trace tolerance for algebra elements.
inline constexpr double kAlgebraTolerance = 1e-12;

/// A traceless skew-Hermitian n x n matrix.
class AlgebraElement {
 public:
  /// Validates; throws ArgumentError if m is not in su(n).
  explicit AlgebraElement(Matrix m);
  static AlgebraElement zero(int n);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator-() const;
  AlgebraElement operator*(double s) const;
  friend AlgebraElement operator*(double s, const AlgebraElement& x) { return x * s; }

  /// Residuals of the defining conditions, for reporting.
  double skew_residual() const;
  double trace_residual() const;

 private:
  struct Trusted {};
  AlgebraElement(Matrix m, Trusted) : m_(std::move(m)) {}
  friend AlgebraElement project_algebra(const Matrix& m);

  Matrix m_;
};

/// A unitary n x n matrix with determinant 1.
class GroupElement {
 public:
  /// Validates; throws ArgumentError if m is not in SU(n).
  explicit GroupElement(Matrix m);
  static GroupElement identity(int n);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }

  /// Product in SU(n). Re-validated, so drift past kGroupTolerance throws.
  GroupElement operator*(const GroupElement& o) const;
  /// g^{-1} = g^*.
  GroupElement inverse() const;

  double unitarity_residual() const;
  double determinant_residual() const;

 private:
  Matrix m_;
};

/// <X, Y> = -tr(XY): the invariant form on su(n) whose longest root has
/// squared length 2.
double killing_form(const AlgebraElement& x, const AlgebraElement& y);

/// Ad(g) X = g X g^{-1}.
AlgebraElement adjoint(const GroupElement& g, const AlgebraElement& x);

/// |<Ad(g)X, Ad(g)Y> - <X, Y>|.
double ad_invariance_residual(const GroupElement& g, const AlgebraElement& x,
                              const AlgebraElement& y);

/// Matrix exponential su(n) -> SU(n): closed form for n = 2, Hermitian
/// eigendecomposition of iX otherwise. Throws NumericalError if the result
/// misses SU(n) by more than kGroupTolerance.
GroupElement exponential(const AlgebraElement& x);

/// (M - M^*)/2 minus its trace part: the orthogonal projection onto su(n).
AlgebraElement project_algebra(const Matrix& m);

}  // namespace cext::lie
