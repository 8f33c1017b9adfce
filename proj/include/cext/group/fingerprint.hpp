#pragma once

#include <string>
#include <vector>

#include "cext/group/extension.hpp"
#include "cext/group/finite_group.hpp"

namespace cext::group {

/// Cheap isomorphism invariants. Different fingerprints prove two groups
/// non-isomorphic; equal fingerprints prove nothing.
struct GroupFingerprint {
  std::size_t order = 0;
  std::vector<std::size_t> order_multiset;  // sorted element orders
  bool abelian = false;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;

  std::size_t count_of_order(std::size_t k) const;
  std::string to_string() const;

  bool operator==(const GroupFingerprint&) const = default;
  auto operator<=>(const GroupFingerprint&) const = default;
};

GroupFingerprint fingerprint(const FiniteGroup& group);
GroupFingerprint fingerprint(const ExtensionGroup& group);

std::size_t element_order(const FiniteGroup& group, Element g);

}  // namespace cext::group
