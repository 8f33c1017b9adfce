#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cext/group/finite_group.hpp"

namespace cext::group {

/// A = mu_n inside C^x, written additively as Z/n.
class CyclicCoefficients {
 public:
  explicit CyclicCoefficients(int modulus);

  int modulus() const { return modulus_; }
  int reduce(std::int64_t value) const {
    const auto r = static_cast<int>(value % modulus_);
    return r < 0 ? r + modulus_ : r;
  }

  bool operator==(const CyclicCoefficients&) const = default;

 private:
  int modulus_;
};

using Tuple = std::vector<Element>;

/// An element of M^p(G; Z/n) = Map(G^p, Z/n). Values are stored in
/// row-major tuple order: (g_1, ..., g_p) sits at sum g_i * m^(p-i).
class Cochain {
 public:
  Cochain(std::size_t group_order, int degree, CyclicCoefficients coeffs, std::vector<int> values);

  static Cochain zero(std::size_t group_order, int degree, CyclicCoefficients coeffs);

  std::size_t group_order() const { return group_order_; }
  int degree() const { return degree_; }
  const CyclicCoefficients& coefficients() const { return coeffs_; }
  int modulus() const { return coeffs_.modulus(); }
  std::size_t size() const { return values_.size(); }
  std::span<const int> values() const { return values_; }

  int operator[](std::size_t index) const { return values_[index]; }
  int at(std::span<const Element> tuple) const { return values_[index_of(tuple)]; }
  /// Shorthand for degree 1 and 2.
  int at(Element g) const { return values_[g]; }
  int at(Element g, Element h) const { return values_[g * group_order_ + h]; }

  std::size_t index_of(std::span<const Element> tuple) const;
  Tuple tuple_of(std::size_t index) const;

  Cochain operator+(const Cochain& other) const;
  Cochain operator-(const Cochain& other) const;
  Cochain operator-() const;
  bool is_zero() const;

  bool operator==(const Cochain& other) const = default;

 private:
  void check_compatible(const Cochain& other) const;

  std::size_t group_order_;
  int degree_;
  CyclicCoefficients coeffs_;
  std::vector<int> values_;
};

/// m^p, throwing CapacityError if it would not fit in memory-sized index.
std::size_t cochain_size(std::size_t group_order, int degree);

/// Face map d_i : G^(p+1) -> G^p of the bar complex. Valid faces are
/// 0..p+1: i = 0 drops the first entry, 1 <= i <= p multiplies entries i
/// and i+1 (1-based), i = p+1 drops the last entry.
Tuple face_map(const FiniteGroup& group, int p, int i, std::span<const Element> tuple);

/// (delta c)(g_1..g_{p+1}) = sum_{i=0}^{p+1} (-1)^i c(d_i(g_1..g_{p+1})) mod n.
Cochain delta(const FiniteGroup& group, const Cochain& c);

/// delta(delta(c)); identically zero for every c.
Cochain delta_squared(const FiniteGroup& group, const Cochain& c);

bool is_cocycle(const FiniteGroup& group, const Cochain& c);

/// First (g, h, k) in row-major order where the cocycle condition fails.
std::optional<std::array<Element, 3>> find_cocycle_violation(const FiniteGroup& group,
                                                             const Cochain& c);

}  // namespace cext::group
