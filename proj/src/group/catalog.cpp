#include "cext/group/catalog.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "cext/error.hpp"

namespace cext::group {

FiniteGroup cyclic_group(std::size_t m) {
  std::vector<Element> table(m * m);
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t h = 0; h < m; ++h) table[g * m + h] = static_cast<Element>((g + h) % m);
  }
  return FiniteGroup(m, std::move(table), "Z" + std::to_string(m));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const auto ma = a.order(), mb = b.order(), m = ma * mb;
  std::vector<Element> table(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const auto ga = static_cast<Element>(x / mb), gb = static_cast<Element>(x % mb);
      const auto ha = static_cast<Element>(y / mb), hb = static_cast<Element>(y % mb);
      table[x * m + y] = static_cast<Element>(a.mul(ga, ha) * mb + b.mul(gb, hb));
    }
  }
  return FiniteGroup(m, std::move(table), a.name() + "x" + b.name());
}

FiniteGroup symmetric_group(std::size_t k) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const auto m = perms.size();
  std::vector<Element> table(m * m);
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t h = 0; h < m; ++h) {
      std::vector<std::size_t> gh(k);
      for (std::size_t x = 0; x < k; ++x) gh[x] = perms[g][perms[h][x]];
      const auto it = std::lower_bound(perms.begin(), perms.end(), gh);
      table[g * m + h] = static_cast<Element>(it - perms.begin());
    }
  }
  return FiniteGroup(m, std::move(table), "S" + std::to_string(k));
}

FiniteGroup dihedral_group(std::size_t k) {
  const auto m = 2 * k;
  std::vector<Element> table(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const auto a = x % k, b = x / k, c = y % k, d = y / k;
      // r^a s^b r^c s^d = r^(a + (-1)^b c) s^(b + d)
      const auto rot = b == 0 ? (a + c) % k : (a + k - c) % k;
      table[x * m + y] = static_cast<Element>(rot + k * ((b + d) % 2));
    }
  }
  return FiniteGroup(m, std::move(table), "D" + std::to_string(k));
}

FiniteGroup quaternion_group() {
  // unit products: sign and result over basis {1, i, j, k}
  constexpr std::array<std::array<int, 4>, 4> unit{{
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  }};
  constexpr std::array<std::array<int, 4>, 4> sign{{
      {1, 1, 1, 1},
      {1, -1, 1, -1},
      {1, -1, -1, 1},
      {1, 1, -1, -1},
  }};
  std::vector<Element> table(64);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int ux = x % 4, uy = y % 4;
      int s = sign[ux][uy] * (x >= 4 ? -1 : 1) * (y >= 4 ? -1 : 1);
      table[x * 8 + y] = static_cast<Element>(unit[ux][uy] + (s < 0 ? 4 : 0));
    }
  }
  return FiniteGroup(8, std::move(table), "Q8");
}

FiniteGroup group_by_name(const std::string& name) {
  if (name == "S3") return symmetric_group(3);
  if (name == "D4") return dihedral_group(4);
  if (name == "Q8") return quaternion_group();
  // Zm or ZaxZb
  const auto parse_cyclic = [&](const std::string& s) -> std::size_t {
    if (s.size() < 2 || s[0] != 'Z') throw ArgumentError("unknown group name '" + name + "'");
    std::size_t m = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw ArgumentError("unknown group name '" + name + "'");
      m = m * 10 + static_cast<std::size_t>(s[i] - '0');
    }
    if (m == 0) throw ArgumentError("unknown group name '" + name + "'");
    return m;
  };
  if (const auto x = name.find('x'); x != std::string::npos) {
    return direct_product(cyclic_group(parse_cyclic(name.substr(0, x))),
                          cyclic_group(parse_cyclic(name.substr(x + 1))));
  }
  return cyclic_group(parse_cyclic(name));
}

std::vector<FiniteGroup> standard_catalog() {
  return {group_by_name("Z2"), group_by_name("Z3"), group_by_name("Z4"), group_by_name("Z2xZ2"),
          group_by_name("S3")};
}

}  // namespace cext::group
