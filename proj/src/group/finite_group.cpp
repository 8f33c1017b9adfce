#include "cext/group/finite_group.hpp"

#include <algorithm>

#include "cext/error.hpp"

namespace cext::group {

std::vector<Element> find_associativity_violation(std::size_t order,
                                                  std::span<const Element> table) {
  for (std::size_t g = 0; g < order; ++g) {
    for (std::size_t h = 0; h < order; ++h) {
      const std::size_t gh = table[g * order + h];
      for (std::size_t k = 0; k < order; ++k) {
        const std::size_t hk = table[h * order + k];
        if (table[gh * order + k] != table[g * order + hk]) {
          return {static_cast<Element>(g), static_cast<Element>(h), static_cast<Element>(k)};
        }
      }
    }
  }
  return {};
}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table, std::string name)
    : order_(order), table_(std::move(table)), name_(std::move(name)) {
  if (order_ == 0) throw ArgumentError("group order must be positive");
  if (table_.size() != order_ * order_) {
    throw ArgumentError("table has " + std::to_string(table_.size()) + " entries, expected " +
                        std::to_string(order_ * order_));
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= order_) {
      throw ArgumentError("table entry (" + std::to_string(i / order_) + ", " +
                          std::to_string(i % order_) + ") out of range");
    }
  }
  for (std::size_t g = 0; g < order_; ++g) {
    if (mul(0, g) != g || mul(g, 0) != g) {
      throw ArgumentError("element 0 is not the identity (fails at " + std::to_string(g) + ")");
    }
  }
  // Latin square: every row and column is a permutation.
  std::vector<char> seen(order_);
  for (std::size_t g = 0; g < order_; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t h = 0; h < order_; ++h) {
      auto& s = seen[mul(g, h)];
      if (s) throw ArgumentError("row " + std::to_string(g) + " is not a permutation");
      s = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t h = 0; h < order_; ++h) {
      auto& s = seen[mul(h, g)];
      if (s) throw ArgumentError("column " + std::to_string(g) + " is not a permutation");
      s = 1;
    }
  }
  if (auto bad = find_associativity_violation(order_, table_); !bad.empty()) {
    throw ArgumentError("table is not associative at (" + std::to_string(bad[0]) + ", " +
                        std::to_string(bad[1]) + ", " + std::to_string(bad[2]) + ")");
  }
  inverse_.resize(order_);
  for (std::size_t g = 0; g < order_; ++g) {
    for (std::size_t h = 0; h < order_; ++h) {
      if (mul(g, h) == 0) {
        inverse_[g] = static_cast<Element>(h);
        break;
      }
    }
  }
}

}  // namespace cext::group
