#pragma once

#include <cstddef>

#include "cext/group/brute_force.hpp"
#include "cext/group/cohomology.hpp"

namespace cext::group {

/// Disagreements between the linear-algebra H^2 and the exhaustive oracle.
/// All fields are zero when the two agree.
struct Concordance {
  /// |count differences| among |Z^2|, |B^2|, |H^2|.
  std::size_t count_mismatches = 0;
  /// Representatives that are not cocycles, or that share an oracle class.
  std::size_t representative_mismatches = 0;
  /// Oracle cocycles the linear solver fails to relate to the representative
  /// of their oracle class.
  std::size_t partition_mismatches = 0;

  bool agrees() const {
    return count_mismatches == 0 && representative_mismatches == 0 && partition_mismatches == 0;
  }
  std::size_t total() const { return count_mismatches + representative_mismatches + partition_mismatches; }
};

Concordance compare_with_oracle(const FiniteGroup& group, const SecondCohomology& linear,
                                const oracle::ExhaustiveCohomology& exhaustive);

}  // namespace cext::group
