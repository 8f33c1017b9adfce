#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cext::group {

using Element = std::uint32_t;

/// A finite group given by its multiplication table. Element 0 is the
/// identity; table(g, h) is the index of g*h.
///
/// Construction validates the Latin-square property, the identity row and
/// column, and associativity (O(m^3)). Instances are immutable.
class FiniteGroup {
 public:
  /// `table` is row-major, order*order entries. Throws ArgumentError on any
  /// violated group axiom, naming the offending entry or triple.
  FiniteGroup(std::size_t order, std::vector<Element> table, std::string name = {});

  std::size_t order() const { return order_; }
  const std::string& name() const { return name_; }
  static constexpr Element identity() { return 0; }

  Element mul(Element g, Element h) const { return table_[g * order_ + h]; }
  Element inverse(Element g) const { return inverse_[g]; }
  std::span<const Element> table() const { return table_; }

  bool operator==(const FiniteGroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::string name_;
};

/// Returns {g, h, k} with (gh)k != g(hk), or an empty vector when the table
/// is associative. Shared by FiniteGroup and ExtensionGroup validation.
std::vector<Element> find_associativity_violation(std::size_t order,
                                                  std::span<const Element> table);

}  // namespace cext::group
