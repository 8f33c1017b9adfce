#include "cext/group/extension.hpp"

#include <string>

namespace cext::group {

namespace {

std::string triple_text(const std::array<Element, 3>& t) {
  return "(" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " + std::to_string(t[2]) + ")";
}

}  // namespace

ExtensionGroup::ExtensionGroup(FiniteGroup base, Cochain cocycle)
    : base_(std::move(base)), cocycle_(std::move(cocycle)) {
  const auto m = base_.order();
  const auto n = static_cast<std::size_t>(cocycle_.modulus());
  order_ = n * m;
  table_.resize(order_ * order_);
  const auto& coeffs = cocycle_.coefficients();
  for (std::size_t x = 0; x < order_; ++x) {
    const auto [a, g] = split(static_cast<Element>(x));
    for (std::size_t y = 0; y < order_; ++y) {
      const auto [b, h] = split(static_cast<Element>(y));
      table_[x * order_ + y] = index(coeffs.reduce(a + b + cocycle_.at(g, h)), base_.mul(g, h));
    }
  }
}

Element ExtensionGroup::include(int a) const {
  return index(cocycle_.coefficients().reduce(a - cocycle_.at(0, 0)), 0);
}

FiniteGroup ExtensionGroup::as_finite_group() const {
  const auto shift = cocycle_.at(0, 0);
  const auto& coeffs = cocycle_.coefficients();
  std::vector<Element> label(order_);
  for (std::size_t x = 0; x < order_; ++x) {
    const auto [a, g] = split(static_cast<Element>(x));
    label[x] = index(coeffs.reduce(a + shift), g);
  }
  std::vector<Element> relabeled(order_ * order_);
  for (std::size_t x = 0; x < order_; ++x) {
    for (std::size_t y = 0; y < order_; ++y) {
      relabeled[label[x] * order_ + label[y]] = label[mul(static_cast<Element>(x), static_cast<Element>(y))];
    }
  }
  return FiniteGroup(order_, std::move(relabeled), "extension of " + base_.name());
}

ExtensionGroup build_extension(const FiniteGroup& base, const Cochain& cocycle) {
  if (cocycle.degree() != 2) throw ArgumentError("extension needs a degree-2 cochain");
  if (cocycle.group_order() != base.order()) {
    throw ArgumentError("cochain and group have different orders");
  }
  ExtensionGroup ext(base, cocycle);
  const auto size = ext.order();

  if (auto bad = find_associativity_violation(size, ext.table_); !bad.empty()) {
    const std::array<Element, 3> witness{ext.project(bad[0]), ext.project(bad[1]), ext.project(bad[2])};
    throw CocycleError("cochain violates the cocycle condition at " + triple_text(witness), witness);
  }

  // Two-sided identity.
  bool found = false;
  for (std::size_t e = 0; e < size && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < size && ok; ++x) {
      const auto ex = static_cast<Element>(x);
      ok = ext.mul(static_cast<Element>(e), ex) == ex && ext.mul(ex, static_cast<Element>(e)) == ex;
    }
    if (ok) {
      ext.identity_ = static_cast<Element>(e);
      found = true;
    }
  }
  if (!found) throw ArgumentError("twisted product has no identity");

  ext.inverse_.assign(size, 0);
  for (std::size_t x = 0; x < size; ++x) {
    bool has = false;
    for (std::size_t y = 0; y < size; ++y) {
      if (ext.mul(static_cast<Element>(x), static_cast<Element>(y)) == ext.identity_ &&
          ext.mul(static_cast<Element>(y), static_cast<Element>(x)) == ext.identity_) {
        ext.inverse_[x] = static_cast<Element>(y);
        has = true;
        break;
      }
    }
    if (!has) throw ArgumentError("element " + std::to_string(x) + " has no inverse");
  }

  // The kernel of the projection is central.
  for (int a = 0; a < ext.modulus(); ++a) {
    const auto z = ext.include(a);
    for (std::size_t x = 0; x < size; ++x) {
      if (ext.mul(z, static_cast<Element>(x)) != ext.mul(static_cast<Element>(x), z)) {
        throw ArgumentError("kernel element is not central");
      }
    }
  }
  return ext;
}

std::vector<Element> extension_isomorphism(const ExtensionGroup& from, const Cochain& d) {
  if (d.degree() != 1 || d.group_order() != from.base().order() ||
      d.modulus() != from.modulus()) {
    throw ArgumentError("witness must be a degree-1 cochain over the same group and modulus");
  }
  const auto& coeffs = d.coefficients();
  std::vector<Element> map(from.order());
  for (std::size_t x = 0; x < from.order(); ++x) {
    const auto [a, g] = from.split(static_cast<Element>(x));
    map[x] = from.index(coeffs.reduce(a + d.at(g)), g);
  }
  return map;
}

bool is_isomorphism(const ExtensionGroup& from, const ExtensionGroup& to,
                    std::span<const Element> map) {
  if (from.order() != to.order() || map.size() != from.order()) return false;
  std::vector<char> hit(to.order(), 0);
  for (auto y : map) {
    if (y >= to.order() || hit[y]) return false;
    hit[y] = 1;
  }
  for (std::size_t x = 0; x < from.order(); ++x) {
    for (std::size_t y = 0; y < from.order(); ++y) {
      const auto xy = from.mul(static_cast<Element>(x), static_cast<Element>(y));
      if (map[xy] != to.mul(map[x], map[y])) return false;
    }
  }
  return true;
}

}  // namespace cext::group
