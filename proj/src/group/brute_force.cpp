#include "cext/group/brute_force.hpp"

#include <string>

#include "cext/error.hpp"

namespace cext::group::oracle {

namespace {

constexpr std::uint64_t kLimit = std::uint64_t{1} << 20;

// n^count, or kLimit + 1 once it passes the limit.
std::uint64_t bounded_power(std::uint64_t n, std::size_t count) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < count; ++i) {
    r *= n;
    if (r > kLimit) return kLimit + 1;
  }
  return r;
}

void decode_digits(std::uint64_t code, int n, std::vector<int>& digits) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    digits[i] = static_cast<int>(code % static_cast<std::uint64_t>(n));
    code /= static_cast<std::uint64_t>(n);
  }
}

std::uint64_t encode_digits(const std::vector<int>& digits, int n) {
  std::uint64_t code = 0;
  for (int d : digits) code = code * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(d);
  return code;
}

}  // namespace

bool feasible(std::size_t group_order, int modulus) {
  return modulus >= 1 && bounded_power(static_cast<std::uint64_t>(modulus), group_order * group_order) <= kLimit;
}

std::uint64_t encode(const Cochain& c) {
  std::uint64_t code = 0;
  for (int v : c.values()) code = code * static_cast<std::uint64_t>(c.modulus()) + static_cast<std::uint64_t>(v);
  return code;
}

Cochain decode(std::uint64_t code, std::size_t group_order, int degree, CyclicCoefficients coeffs) {
  std::vector<int> digits(cochain_size(group_order, degree));
  decode_digits(code, coeffs.modulus(), digits);
  return Cochain(group_order, degree, coeffs, std::move(digits));
}

bool satisfies_cocycle_condition(const FiniteGroup& group, std::span<const int> c, int modulus) {
  const auto m = group.order();
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t h = 0; h < m; ++h) {
      const auto gh = group.mul(static_cast<Element>(g), static_cast<Element>(h));
      for (std::size_t k = 0; k < m; ++k) {
        const auto hk = group.mul(static_cast<Element>(h), static_cast<Element>(k));
        const int lhs = c[g * m + h] + c[gh * m + k];
        const int rhs = c[g * m + hk] + c[h * m + k];
        if ((lhs - rhs) % modulus != 0) return false;
      }
    }
  }
  return true;
}

ExhaustiveCohomology exhaustive_h2(const FiniteGroup& group, const CyclicCoefficients& coeffs) {
  const auto m = group.order();
  const int n = coeffs.modulus();
  if (!feasible(m, n)) {
    throw CapacityError("exhaustive enumeration of " + std::to_string(n) + "^" +
                        std::to_string(m * m) + " cochains is beyond 2^20");
  }
  ExhaustiveCohomology out;

  // B^2: d(h) - d(gh) + d(g) for every d : G -> Z/n.
  std::vector<std::vector<int>> coboundaries;
  {
    std::unordered_map<std::uint64_t, bool> seen;
    const auto count = bounded_power(static_cast<std::uint64_t>(n), m);
    std::vector<int> d(m), b(m * m);
    for (std::uint64_t code = 0; code < count; ++code) {
      decode_digits(code, n, d);
      for (std::size_t g = 0; g < m; ++g) {
        for (std::size_t h = 0; h < m; ++h) {
          const auto gh = group.mul(static_cast<Element>(g), static_cast<Element>(h));
          b[g * m + h] = ((d[h] - d[gh] + d[g]) % n + n) % n;
        }
      }
      if (seen.emplace(encode_digits(b, n), true).second) coboundaries.push_back(b);
    }
  }
  out.coboundaries = coboundaries.size();

  const auto total = bounded_power(static_cast<std::uint64_t>(n), m * m);
  std::vector<int> c(m * m), shifted(m * m);
  for (std::uint64_t code = 0; code < total; ++code) {
    decode_digits(code, n, c);
    if (satisfies_cocycle_condition(group, c, n)) out.cocycle_codes.push_back(code);
  }
  out.cocycles = out.cocycle_codes.size();

  for (auto code : out.cocycle_codes) {
    if (out.class_of.count(code)) continue;
    const auto id = out.classes++;
    decode_digits(code, n, c);
    for (const auto& b : coboundaries) {
      for (std::size_t i = 0; i < c.size(); ++i) shifted[i] = (c[i] + b[i]) % n;
      out.class_of.emplace(encode_digits(shifted, n), id);
    }
  }
  return out;
}

}  // namespace cext::group::oracle
