#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cext::group {

/// Exact group orders; these overflow 64 bits well inside the capacity guard.
using Count = boost::multiprecision::cpp_int;

namespace zn {

/// Dense row-major integer matrix; the modulus lives with whoever uses it.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

struct PrimePower {
  std::int64_t prime;
  int exponent;
  std::int64_t value;  // prime^exponent
};

/// Prime-power factorization, ascending primes. Empty for n = 1.
std::vector<PrimePower> factor(std::int64_t n);

std::int64_t mod(std::int64_t a, std::int64_t n);
/// Inverse of a unit modulo n.
std::int64_t inverse_mod(std::int64_t a, std::int64_t n);

/// Smith normal form over the local ring Z/p^k: left * A * right = diag.
/// Only the transforms that were requested are populated.
struct SmithForm {
  PrimePower ring;
  std::size_t rank = 0;
  /// diagonal[j] for j < min(rows, cols); a power of p, or 0 past the rank.
  std::vector<std::int64_t> diagonal;
  std::optional<Matrix> left, left_inverse, right, right_inverse;

  /// Diagonal entry for any column index (0 beyond the stored diagonal).
  std::int64_t entry(std::size_t j) const { return j < diagonal.size() ? diagonal[j] : 0; }
};

struct SmithTracking {
  bool left = false;
  bool left_inverse = false;
  bool right = false;
  bool right_inverse = false;
};

SmithForm smith_local(Matrix a, const PrimePower& ring, SmithTracking tracking);

/// A cyclic summand of a subgroup of (Z/n)^c: `vector` generates a copy of
/// Z/order.
struct Generator {
  std::vector<std::int64_t> vector;
  std::int64_t order;
};

/// The homomorphism x -> A x on (Z/n)^cols -> (Z/n)^rows.
class LinearMap {
 public:
  /// With `solvable`, the row transform is kept so solve() works; that
  /// costs rows^2 memory.
  LinearMap(const Matrix& a, std::int64_t modulus, bool solvable = false);

  std::int64_t modulus() const { return modulus_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// The kernel as an internal direct sum of cyclic subgroups.
  const std::vector<Generator>& kernel() const { return kernel_; }
  /// Which prime-power component each kernel generator came from.
  const std::vector<std::size_t>& kernel_component() const { return kernel_component_; }
  const std::vector<PrimePower>& components() const { return components_; }

  Count kernel_order() const;
  Count image_order() const;

  /// Coordinates of a kernel element against kernel(); entry j lies in
  /// Z/kernel()[j].order. Throws ArgumentError if x is not in the kernel.
  std::vector<std::int64_t> kernel_coordinates(const std::vector<std::int64_t>& x) const;

  /// Some x with A x = b, or nullopt when b is not in the image.
  std::optional<std::vector<std::int64_t>> solve(const std::vector<std::int64_t>& b) const;

 private:
  struct Component {
    PrimePower ring;
    std::int64_t idempotent;  // 1 mod ring.value, 0 mod n / ring.value
    SmithForm smith;
    std::vector<std::size_t> kernel_columns;
  };

  std::int64_t modulus_;
  std::size_t rows_;
  std::size_t cols_;
  bool solvable_;
  std::vector<PrimePower> components_;
  std::vector<Component> parts_;
  std::vector<Generator> kernel_;
  std::vector<std::size_t> kernel_component_;
};

}  // namespace zn
}  // namespace cext::group
