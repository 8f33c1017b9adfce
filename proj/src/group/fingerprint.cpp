#include "cext/group/fingerprint.hpp"

#include <algorithm>

namespace cext::group {

std::size_t element_order(const FiniteGroup& group, Element g) {
  std::size_t k = 1;
  for (Element x = g; x != FiniteGroup::identity(); x = group.mul(x, g)) ++k;
  return k;
}

std::size_t GroupFingerprint::count_of_order(std::size_t k) const {
  return static_cast<std::size_t>(std::count(order_multiset.begin(), order_multiset.end(), k));
}

std::string GroupFingerprint::to_string() const {
  std::string s = "order " + std::to_string(order) + ", element orders {";
  for (std::size_t i = 0; i < order_multiset.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(order_multiset[i]);
  }
  s += "}, ";
  s += abelian ? "abelian" : "non-abelian";
  s += ", |Z| " + std::to_string(center_order) + ", |G'| " + std::to_string(derived_order);
  return s;
}

GroupFingerprint fingerprint(const FiniteGroup& group) {
  const auto m = group.order();
  GroupFingerprint fp;
  fp.order = m;
  for (std::size_t g = 0; g < m; ++g) fp.order_multiset.push_back(element_order(group, static_cast<Element>(g)));
  std::sort(fp.order_multiset.begin(), fp.order_multiset.end());

  for (std::size_t g = 0; g < m; ++g) {
    bool central = true;
    for (std::size_t h = 0; h < m && central; ++h) {
      central = group.mul(static_cast<Element>(g), static_cast<Element>(h)) ==
                group.mul(static_cast<Element>(h), static_cast<Element>(g));
    }
    if (central) ++fp.center_order;
  }
  fp.abelian = fp.center_order == m;

  // Commutator subgroup: close the set of commutators under products.
  std::vector<char> in(m, 0);
  std::vector<Element> members;
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t h = 0; h < m; ++h) {
      const auto eg = static_cast<Element>(g), eh = static_cast<Element>(h);
      const auto c = group.mul(group.mul(eg, eh), group.mul(group.inverse(eg), group.inverse(eh)));
      if (!in[c]) {
        in[c] = 1;
        members.push_back(c);
      }
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (auto p : {group.mul(members[i], members[j]), group.mul(members[j], members[i])}) {
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
        }
      }
    }
  }
  fp.derived_order = members.size();
  return fp;
}

GroupFingerprint fingerprint(const ExtensionGroup& group) {
  return fingerprint(group.as_finite_group());
}

}  // namespace cext::group
