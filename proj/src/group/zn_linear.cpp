#include "cext/group/zn_linear.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "cext/error.hpp"

namespace cext::group::zn {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<PrimePower> factor(std::int64_t n) {
  if (n < 1) throw ArgumentError("modulus must be positive");
  std::vector<PrimePower> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
      pp.value *= p;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const auto r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
  std::int64_t r0 = n, r1 = mod(a, n);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const auto q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  if (r0 != 1) throw ArgumentError(std::to_string(a) + " is not a unit mod " + std::to_string(n));
  return mod(s0, n);
}

namespace {

int valuation(std::int64_t a, const PrimePower& ring) {
  if (a == 0) return ring.exponent;
  int v = 0;
  while (a % ring.prime == 0) {
    a /= ring.prime;
    ++v;
  }
  return v;
}

std::int64_t power(std::int64_t base, int exponent) {
  std::int64_t r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

// Applies elementary operations to A and keeps the requested transforms in
// step so that left * A_original * right == A at every point.
class Reducer {
 public:
  Reducer(Matrix& a, std::int64_t q, SmithForm& out, SmithTracking tracking) : a_(a), q_(q), out_(out) {
    if (tracking.left) out_.left = Matrix::identity(a.rows());
    if (tracking.left_inverse) out_.left_inverse = Matrix::identity(a.rows());
    if (tracking.right) out_.right = Matrix::identity(a.cols());
    if (tracking.right_inverse) out_.right_inverse = Matrix::identity(a.cols());
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    swap_rows_of(a_, i, j);
    if (out_.left) swap_rows_of(*out_.left, i, j);
    if (out_.left_inverse) swap_cols_of(*out_.left_inverse, i, j);
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    swap_cols_of(a_, i, j);
    if (out_.right) swap_cols_of(*out_.right, i, j);
    if (out_.right_inverse) swap_rows_of(*out_.right_inverse, i, j);
  }

  void scale_row(std::size_t r, std::int64_t unit) {
    scale_row_of(a_, r, unit);
    if (out_.left) scale_row_of(*out_.left, r, unit);
    if (out_.left_inverse) {
      auto& m = *out_.left_inverse;
      const auto inv = inverse_mod(unit, q_);
      for (std::size_t i = 0; i < m.rows(); ++i) m(i, r) = mod(m(i, r) * inv, q_);
    }
  }

  // row_i -= t * row_r
  void sub_row(std::size_t i, std::size_t r, std::int64_t t) {
    sub_row_of(a_, i, r, t);
    if (out_.left) sub_row_of(*out_.left, i, r, t);
    if (out_.left_inverse) {
      auto& m = *out_.left_inverse;
      for (std::size_t k = 0; k < m.rows(); ++k) m(k, r) = mod(m(k, r) + t * m(k, i), q_);
    }
  }

  // col_j -= t * col_r
  void sub_col(std::size_t j, std::size_t r, std::int64_t t) {
    sub_col_of(a_, j, r, t);
    if (out_.right) sub_col_of(*out_.right, j, r, t);
    if (out_.right_inverse) {
      auto& m = *out_.right_inverse;
      for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) = mod(m(r, k) + t * m(j, k), q_);
    }
  }

 private:
  static void swap_rows_of(Matrix& m, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
  }
  static void swap_cols_of(Matrix& m, std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
  }
  void scale_row_of(Matrix& m, std::size_t r, std::int64_t unit) const {
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = mod(m(r, c) * unit, q_);
  }
  void sub_row_of(Matrix& m, std::size_t i, std::size_t r, std::int64_t t) const {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0) m(i, c) = mod(m(i, c) - t * m(r, c), q_);
    }
  }
  void sub_col_of(Matrix& m, std::size_t j, std::size_t r, std::int64_t t) const {
    for (std::size_t k = 0; k < m.rows(); ++k) {
      if (m(k, r) != 0) m(k, j) = mod(m(k, j) - t * m(k, r), q_);
    }
  }

  Matrix& a_;
  std::int64_t q_;
  SmithForm& out_;
};

}  // namespace

SmithForm smith_local(Matrix a, const PrimePower& ring, SmithTracking tracking) {
  const auto q = ring.value;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = mod(a(r, c), q);
  }
  SmithForm out;
  out.ring = ring;
  Reducer reduce(a, q, out, tracking);

  const auto steps = std::min(a.rows(), a.cols());
  std::size_t r = 0;
  for (; r < steps; ++r) {
    // Pivot of least valuation; it divides everything left in the block.
    int best = ring.exponent;
    std::size_t pi = r, pj = r;
    for (std::size_t i = r; i < a.rows() && best > 0; ++i) {
      for (std::size_t j = r; j < a.cols(); ++j) {
        if (a(i, j) == 0) continue;
        const int v = valuation(a(i, j), ring);
        if (v < best) {
          best = v;
          pi = i;
          pj = j;
          if (v == 0) break;
        }
      }
    }
    if (best == ring.exponent) break;
    reduce.swap_rows(r, pi);
    reduce.swap_cols(r, pj);

    const auto pivot_power = power(ring.prime, best);
    const auto unit = a(r, r) / pivot_power;
    reduce.scale_row(r, inverse_mod(unit, q));

    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, r) != 0) reduce.sub_row(i, r, a(i, r) / pivot_power);
    }
    for (std::size_t j = r + 1; j < a.cols(); ++j) {
      if (a(r, j) != 0) reduce.sub_col(j, r, a(r, j) / pivot_power);
    }
  }
  out.rank = r;
  out.diagonal.assign(steps, 0);
  for (std::size_t j = 0; j < r; ++j) out.diagonal[j] = a(j, j);
  return out;
}

LinearMap::LinearMap(const Matrix& a, std::int64_t modulus, bool solvable)
    : modulus_(modulus), rows_(a.rows()), cols_(a.cols()), solvable_(solvable),
      components_(factor(modulus)) {
  for (const auto& ring : components_) {
    // CRT idempotent: e = 1 mod q, e = 0 mod n/q.
    const auto cofactor = modulus_ / ring.value;
    const auto idempotent = mod(cofactor * inverse_mod(cofactor, ring.value), modulus_);

    SmithTracking tracking;
    tracking.right = true;
    tracking.right_inverse = true;
    tracking.left = solvable_;
    Component part{ring, idempotent, smith_local(a, ring, tracking), {}};

    const auto q = ring.value;
    const auto& right = *part.smith.right;
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto s = part.smith.entry(j);
      const auto order = std::gcd(s, q);  // gcd(0, q) = q
      if (order == 1) continue;
      const auto scale = q / order;
      Generator gen{std::vector<std::int64_t>(cols_), order};
      for (std::size_t i = 0; i < cols_; ++i) {
        gen.vector[i] = mod(mod(scale * right(i, j), q) * idempotent, modulus_);
      }
      part.kernel_columns.push_back(j);
      kernel_.push_back(std::move(gen));
      kernel_component_.push_back(parts_.size());
    }
    parts_.push_back(std::move(part));
  }
}

Count LinearMap::kernel_order() const {
  Count order = 1;
  for (const auto& g : kernel_) order *= g.order;
  return order;
}

Count LinearMap::image_order() const {
  Count domain = 1;
  for (std::size_t i = 0; i < cols_; ++i) domain *= modulus_;
  return domain / kernel_order();
}

std::vector<std::int64_t> LinearMap::kernel_coordinates(const std::vector<std::int64_t>& x) const {
  if (x.size() != cols_) throw ArgumentError("vector length does not match the domain");
  std::vector<std::int64_t> coords;
  coords.reserve(kernel_.size());
  for (const auto& part : parts_) {
    const auto q = part.ring.value;
    const auto& vinv = *part.smith.right_inverse;
    std::vector<std::int64_t> y(cols_, 0);
    for (std::size_t r = 0; r < cols_; ++r) {
      std::int64_t acc = 0;
      for (std::size_t c = 0; c < cols_; ++c) acc = mod(acc + vinv(r, c) * mod(x[c], q), q);
      y[r] = acc;
    }
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto order = std::gcd(part.smith.entry(j), q);
      const auto scale = q / order;
      if (y[j] % scale != 0) throw ArgumentError("vector is not in the kernel");
      if (order != 1) coords.push_back((y[j] / scale) % order);
    }
  }
  return coords;
}

std::optional<std::vector<std::int64_t>> LinearMap::solve(const std::vector<std::int64_t>& b) const {
  if (!solvable_) throw ArgumentError("LinearMap was built without solve support");
  if (b.size() != rows_) throw ArgumentError("right-hand side length does not match the codomain");
  std::vector<std::int64_t> x(cols_, 0);
  for (const auto& part : parts_) {
    const auto q = part.ring.value;
    const auto& u = *part.smith.left;
    const auto& v = *part.smith.right;
    std::vector<std::int64_t> y(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      std::int64_t c = 0;
      for (std::size_t k = 0; k < rows_; ++k) {
        if (u(r, k) != 0) c = mod(c + u(r, k) * mod(b[k], q), q);
      }
      const auto s = r < cols_ ? part.smith.entry(r) : 0;
      if (s == 0) {
        if (c != 0) return std::nullopt;
        continue;
      }
      if (c % s != 0) return std::nullopt;  // s is a power of p
      y[r] = c / s;
    }
    for (std::size_t i = 0; i < cols_; ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < cols_; ++j) acc = mod(acc + v(i, j) * y[j], q);
      x[i] = mod(x[i] + acc * part.idempotent, modulus_);
    }
  }
  return x;
}

}  // namespace cext::group::zn
