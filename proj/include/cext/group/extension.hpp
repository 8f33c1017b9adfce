#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "cext/error.hpp"
#include "cext/group/cochain.hpp"
#include "cext/group/finite_group.hpp"

namespace cext::group {

/// Raised by build_extension when the twisted product is not associative.
/// triple() is the base-group witness (g, h, k) of the failure.
class CocycleError : public ArgumentError {
 public:
  CocycleError(const std::string& what, std::array<Element, 3> triple)
      : ArgumentError(what), triple_(triple) {}
  const std::array<Element, 3>& triple() const { return triple_; }

 private:
  std::array<Element, 3> triple_;
};

/// The central extension Z/n -> E -> G twisted by a 2-cocycle c, with
/// product (a, g) * (b, h) = (a + b + c(g, h), gh).
///
/// Elements are indexed as g * n + a. The identity is (-c(e, e), e), which
/// is generally not index 0; as_finite_group() relabels it there.
class ExtensionGroup {
 public:
  const FiniteGroup& base() const { return base_; }
  const Cochain& cocycle() const { return cocycle_; }
  int modulus() const { return cocycle_.modulus(); }
  std::size_t order() const { return order_; }

  Element index(int a, Element g) const {
    return static_cast<Element>(g * static_cast<Element>(modulus()) + static_cast<Element>(a));
  }
  /// (a, g) for an element index.
  std::pair<int, Element> split(Element x) const {
    const auto n = static_cast<Element>(modulus());
    return {static_cast<int>(x % n), x / n};
  }
  Element mul(Element x, Element y) const { return table_[x * order_ + y]; }
  Element identity() const { return identity_; }
  Element inverse(Element x) const { return inverse_[x]; }
  /// pi : E -> G.
  Element project(Element x) const { return split(x).second; }
  /// iota : Z/n -> E, a -> (a, e) * identity, i.e. (a - c(e,e), e).
  Element include(int a) const;

  std::span<const Element> table() const { return table_; }

  /// Same group with (a, g) relabeled to g * n + (a + c(e,e) mod n), so
  /// that the identity sits at index 0.
  FiniteGroup as_finite_group() const;

 private:
  friend ExtensionGroup build_extension(const FiniteGroup& base, const Cochain& cocycle);
  ExtensionGroup(FiniteGroup base, Cochain cocycle);

  FiniteGroup base_;
  Cochain cocycle_;
  std::size_t order_;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
};

/// Builds the twisted product table and checks the group axioms on the
/// table itself. Throws CocycleError with a witness triple when the table
/// is not associative, ArgumentError for shape mismatches.
ExtensionGroup build_extension(const FiniteGroup& base, const Cochain& cocycle);

/// The map (a, g) -> (a + d(g), g) from E(c1) to E(c2) where
/// c1 - c2 = delta(d). Returned as an index permutation.
std::vector<Element> extension_isomorphism(const ExtensionGroup& from, const Cochain& d);

/// True when `map` is a bijection carrying from.mul to to.mul.
bool is_isomorphism(const ExtensionGroup& from, const ExtensionGroup& to,
                    std::span<const Element> map);

}  // namespace cext::group
