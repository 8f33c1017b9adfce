#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cext/group/cochain.hpp"
#include "cext/group/finite_group.hpp"
#include "cext/group/zn_linear.hpp"

namespace cext::group {

/// Dense linear-algebra paths accept m <= 32 and n <= 8.
inline constexpr std::size_t kMaxLinearGroupOrder = 32;
inline constexpr int kMaxLinearModulus = 8;
/// second_cohomology lists every class only up to this many.
inline constexpr std::size_t kMaxEnumeratedClasses = 65536;

/// Throws CapacityError outside the dense guard.
void check_linear_capacity(const FiniteGroup& group, const CyclicCoefficients& coeffs);

/// Matrix of delta : M^p -> M^(p+1), rows m^(p+1), cols m^p, entries mod n.
zn::Matrix delta_matrix(const FiniteGroup& group, int degree, const CyclicCoefficients& coeffs);

/// Z^2(G; Z/n) as an internal direct sum of cyclic subgroups.
struct CocycleSpace {
  std::vector<Cochain> generators;
  std::vector<std::int64_t> orders;
  Count count;
};

CocycleSpace cocycle_space(const FiniteGroup& group, const CyclicCoefficients& coeffs);

/// B^2(G; Z/n). The generators are delta of the indicator cochains of the
/// group elements; they span B^2 but are not independent.
struct CoboundarySpace {
  std::vector<Cochain> generators;
  Count count;
};

CoboundarySpace coboundary_space(const FiniteGroup& group, const CyclicCoefficients& coeffs);

/// H^2(G; Z/n) = Z^2 / B^2 with one cocycle per class.
struct SecondCohomology {
  Count cocycles;
  Count coboundaries;
  Count classes;
  /// H^2 is isomorphic to the sum of Z/f over these (prime powers).
  std::vector<std::int64_t> invariant_factors;
  /// representatives[0] is the zero cochain (the split extension).
  std::vector<Cochain> representatives;
};

SecondCohomology second_cohomology(const FiniteGroup& group, const CyclicCoefficients& coeffs,
                                   std::size_t max_classes = kMaxEnumeratedClasses);

/// Some d with c1 - c2 = delta(d), or nullopt when the classes differ.
std::optional<Cochain> cohomologous(const FiniteGroup& group, const Cochain& c1, const Cochain& c2);

}  // namespace cext::group
