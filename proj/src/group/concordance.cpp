#include "cext/group/concordance.hpp"

#include <vector>

namespace cext::group {

Concordance compare_with_oracle(const FiniteGroup& group, const SecondCohomology& linear,
                                const oracle::ExhaustiveCohomology& exhaustive) {
  Concordance out;
  out.count_mismatches = (linear.cocycles != exhaustive.cocycles) +
                         (linear.coboundaries != exhaustive.coboundaries) +
                         (linear.classes != exhaustive.classes);

  // Representative of each oracle class, as an index into linear.representatives.
  std::vector<std::ptrdiff_t> rep_of_class(exhaustive.classes, -1);
  for (std::size_t i = 0; i < linear.representatives.size(); ++i) {
    const auto it = exhaustive.class_of.find(oracle::encode(linear.representatives[i]));
    if (it == exhaustive.class_of.end() || rep_of_class[it->second] != -1) {
      ++out.representative_mismatches;
      continue;
    }
    rep_of_class[it->second] = static_cast<std::ptrdiff_t>(i);
  }

  if (linear.representatives.empty()) return out;
  const auto& shape = linear.representatives.front();
  for (const auto code : exhaustive.cocycle_codes) {
    const auto cls = exhaustive.class_of.at(code);
    const auto rep = rep_of_class[cls];
    if (rep < 0) {
      ++out.partition_mismatches;
      continue;
    }
    const auto c = oracle::decode(code, shape.group_order(), 2, shape.coefficients());
    if (!cohomologous(group, c, linear.representatives[static_cast<std::size_t>(rep)])) {
      ++out.partition_mismatches;
    }
  }
  return out;
}

}  // namespace cext::group
