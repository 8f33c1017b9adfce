#include "cext/group/cohomology.hpp"

#include <numeric>
#include <string>

#include "cext/error.hpp"

namespace cext::group {

namespace {

std::vector<std::int64_t> to_vector(const Cochain& c) {
  return {c.values().begin(), c.values().end()};
}

Cochain to_cochain(const std::vector<std::int64_t>& v, std::size_t m, int degree,
                   const CyclicCoefficients& coeffs) {
  std::vector<int> values(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) values[i] = coeffs.reduce(v[i]);
  return Cochain(m, degree, coeffs, std::move(values));
}

}  // namespace

void check_linear_capacity(const FiniteGroup& group, const CyclicCoefficients& coeffs) {
  if (group.order() > kMaxLinearGroupOrder) {
    throw CapacityError("group order " + std::to_string(group.order()) + " exceeds " +
                        std::to_string(kMaxLinearGroupOrder));
  }
  if (coeffs.modulus() > kMaxLinearModulus) {
    throw CapacityError("modulus " + std::to_string(coeffs.modulus()) + " exceeds " +
                        std::to_string(kMaxLinearModulus));
  }
}

zn::Matrix delta_matrix(const FiniteGroup& group, int degree, const CyclicCoefficients& coeffs) {
  const auto m = group.order();
  const auto rows = cochain_size(m, degree + 1);
  const auto cols = cochain_size(m, degree);
  zn::Matrix d(rows, cols);
  const auto source = Cochain::zero(m, degree, coeffs);
  Tuple tuple(static_cast<std::size_t>(degree) + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t rest = r;
    for (int j = degree; j >= 0; --j) {
      tuple[static_cast<std::size_t>(j)] = static_cast<Element>(rest % m);
      rest /= m;
    }
    for (int i = 0; i <= degree + 1; ++i) {
      const auto col = source.index_of(face_map(group, degree, i, tuple));
      d(r, col) = coeffs.reduce(d(r, col) + (i % 2 == 0 ? 1 : -1));
    }
  }
  return d;
}

CocycleSpace cocycle_space(const FiniteGroup& group, const CyclicCoefficients& coeffs) {
  check_linear_capacity(group, coeffs);
  const zn::LinearMap d2(delta_matrix(group, 2, coeffs), coeffs.modulus());
  CocycleSpace out;
  for (const auto& gen : d2.kernel()) {
    out.generators.push_back(to_cochain(gen.vector, group.order(), 2, coeffs));
    out.orders.push_back(gen.order);
  }
  out.count = d2.kernel_order();
  return out;
}

CoboundarySpace coboundary_space(const FiniteGroup& group, const CyclicCoefficients& coeffs) {
  check_linear_capacity(group, coeffs);
  const auto d1 = delta_matrix(group, 1, coeffs);
  CoboundarySpace out;
  for (std::size_t g = 0; g < group.order(); ++g) {
    std::vector<std::int64_t> column(d1.rows());
    for (std::size_t r = 0; r < d1.rows(); ++r) column[r] = d1(r, g);
    out.generators.push_back(to_cochain(column, group.order(), 2, coeffs));
  }
  out.count = zn::LinearMap(d1, coeffs.modulus()).image_order();
  return out;
}

SecondCohomology second_cohomology(const FiniteGroup& group, const CyclicCoefficients& coeffs,
                                   std::size_t max_classes) {
  check_linear_capacity(group, coeffs);
  const auto m = group.order();
  const auto n = coeffs.modulus();
  const zn::LinearMap d2(delta_matrix(group, 2, coeffs), n);
  const auto d1 = delta_matrix(group, 1, coeffs);
  const zn::LinearMap d1_map(d1, n);

  SecondCohomology out;
  out.cocycles = d2.kernel_order();
  out.coboundaries = d1_map.image_order();
  out.classes = out.cocycles / out.coboundaries;
  if (out.classes > max_classes) {
    throw CapacityError("H^2 has " + out.classes.str() + " classes; listing is capped at " +
                        std::to_string(max_classes));
  }

  // Coordinates of each coboundary generator delta(e_g) in the Z^2 basis.
  std::vector<std::vector<std::int64_t>> b_coords;
  for (std::size_t g = 0; g < m; ++g) {
    std::vector<std::int64_t> column(d1.rows());
    for (std::size_t r = 0; r < d1.rows(); ++r) column[r] = d1(r, g);
    b_coords.push_back(d2.kernel_coordinates(column));
  }

  // Per prime-power component, H^2 is (Z/q)^r modulo the coboundary
  // coordinates and the generator orders. A Smith form of that relation
  // matrix splits it into cyclic summands; the columns of the inverse row
  // transform are the summand generators in Z^2 coordinates.
  struct Summand {
    std::int64_t order;
    std::vector<std::int64_t> cochain;  // over Z/n, length m^2
  };
  std::vector<Summand> summands;
  const auto& kernel = d2.kernel();
  for (std::size_t k = 0; k < d2.components().size(); ++k) {
    const auto& ring = d2.components()[k];
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < kernel.size(); ++j) {
      if (d2.kernel_component()[j] == k) members.push_back(j);
    }
    const auto r = members.size();
    if (r == 0) continue;
    zn::Matrix rel(r, m + r);
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t g = 0; g < m; ++g) rel(a, g) = b_coords[g][members[a]];
      rel(a, m + a) = kernel[members[a]].order;
    }
    zn::SmithTracking tracking;
    tracking.left_inverse = true;
    const auto smith = zn::smith_local(rel, ring, tracking);
    const auto& basis = *smith.left_inverse;
    for (std::size_t i = 0; i < r; ++i) {
      const auto order = std::gcd(smith.entry(i), ring.value);
      if (order == 1) continue;
      std::vector<std::int64_t> cochain(m * m, 0);
      for (std::size_t a = 0; a < r; ++a) {
        const auto coeff = basis(a, i);
        if (coeff == 0) continue;
        const auto& z = kernel[members[a]].vector;
        for (std::size_t e = 0; e < cochain.size(); ++e) cochain[e] = zn::mod(cochain[e] + coeff * z[e], n);
      }
      out.invariant_factors.push_back(order);
      summands.push_back({order, std::move(cochain)});
    }
  }

  // Mixed-radix enumeration, first summand fastest; index 0 is the zero class.
  const auto total = out.classes.convert_to<std::size_t>();
  out.representatives.reserve(total);
  std::vector<std::int64_t> digits(summands.size(), 0);
  for (std::size_t index = 0; index < total; ++index) {
    std::vector<std::int64_t> cochain(m * m, 0);
    for (std::size_t s = 0; s < summands.size(); ++s) {
      if (digits[s] == 0) continue;
      for (std::size_t e = 0; e < cochain.size(); ++e) {
        cochain[e] = zn::mod(cochain[e] + digits[s] * summands[s].cochain[e], n);
      }
    }
    out.representatives.push_back(to_cochain(cochain, m, 2, coeffs));
    for (std::size_t s = 0; s < summands.size(); ++s) {
      if (++digits[s] < summands[s].order) break;
      digits[s] = 0;
    }
  }
  return out;
}

std::optional<Cochain> cohomologous(const FiniteGroup& group, const Cochain& c1, const Cochain& c2) {
  if (c1.degree() != 2 || c2.degree() != 2) {
    throw ArgumentError("cohomologous compares degree-2 cochains");
  }
  if (c1.group_order() != group.order() || c2.group_order() != group.order() ||
      c1.coefficients() != c2.coefficients()) {
    throw ArgumentError("cochains do not live over the same group and coefficients");
  }
  const auto& coeffs = c1.coefficients();
  check_linear_capacity(group, coeffs);
  const zn::LinearMap d1(delta_matrix(group, 1, coeffs), coeffs.modulus(), /*solvable=*/true);
  const auto witness = d1.solve(to_vector(c1 - c2));
  if (!witness) return std::nullopt;
  return to_cochain(*witness, group.order(), 1, coeffs);
}

}  // namespace cext::group
