#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cext/group/cochain.hpp"
#include "cext/group/finite_group.hpp"

// Exhaustive enumeration of H^2(G; Z/n). Shares no code with the linear
// algebra path: the cocycle and coboundary formulas are written out
// directly, every map G^2 -> Z/n is visited, and classes are formed by
// translating cocycles by every coboundary.
namespace cext::group::oracle {

/// n^(m^2) <= 2^20.
bool feasible(std::size_t group_order, int modulus);

/// Base-n code of a cochain, first value most significant.
std::uint64_t encode(const Cochain& c);
Cochain decode(std::uint64_t code, std::size_t group_order, int degree, CyclicCoefficients coeffs);

struct ExhaustiveCohomology {
  std::uint64_t cocycles = 0;
  std::uint64_t coboundaries = 0;
  std::uint64_t classes = 0;
  /// Every cocycle code, ascending, with its class id (ids in order of
  /// first appearance).
  std::vector<std::uint64_t> cocycle_codes;
  std::unordered_map<std::uint64_t, std::size_t> class_of;
};

/// Throws CapacityError when not feasible().
ExhaustiveCohomology exhaustive_h2(const FiniteGroup& group, const CyclicCoefficients& coeffs);

/// Direct evaluation of c(h,k) - c(gh,k) + c(g,hk) - c(g,h) on all triples.
bool satisfies_cocycle_condition(const FiniteGroup& group, std::span<const int> c, int modulus);

}  // namespace cext::group::oracle
