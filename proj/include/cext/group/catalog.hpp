#pragma once

#include <string>
#include <vector>

#include "cext/group/finite_group.hpp"

namespace cext::group {

FiniteGroup cyclic_group(std::size_t m);
/// Pairs (a, b) indexed a * |B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// Permutations of {0..k-1} in lexicographic order, (gh)(x) = g(h(x)).
FiniteGroup symmetric_group(std::size_t k);
/// Order 2k, r^i s^j at index i + k*j.
FiniteGroup dihedral_group(std::size_t k);
/// {1, i, j, k} at 0..3, their negatives at 4..7.
FiniteGroup quaternion_group();

/// Z2, Z3, Z4, Z2xZ2, S3, D4, Q8, or Zm / Zm1xZm2 for any sizes.
FiniteGroup group_by_name(const std::string& name);

/// The groups the acceptance battery sweeps.
std::vector<FiniteGroup> standard_catalog();

}  // namespace cext::group
