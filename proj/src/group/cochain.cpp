#include "cext/group/cochain.hpp"

#include <algorithm>
#include <string>

#include "cext/error.hpp"

namespace cext::group {

namespace {

// Largest cochain we are willing to materialize (values, not bytes).
constexpr std::size_t kMaxCochainSize = std::size_t{1} << 26;

}  // namespace

CyclicCoefficients::CyclicCoefficients(int modulus) : modulus_(modulus) {
  if (modulus < 1) throw ArgumentError("coefficient modulus must be >= 1");
}

std::size_t cochain_size(std::size_t group_order, int degree) {
  if (degree < 0) throw ArgumentError("cochain degree must be >= 0");
  std::size_t size = 1;
  for (int i = 0; i < degree; ++i) {
    if (size > kMaxCochainSize / group_order) {
      throw CapacityError("cochain of degree " + std::to_string(degree) + " over a group of order " +
                          std::to_string(group_order) + " is too large");
    }
    size *= group_order;
  }
  return size;
}

Cochain::Cochain(std::size_t group_order, int degree, CyclicCoefficients coeffs,
                 std::vector<int> values)
    : group_order_(group_order), degree_(degree), coeffs_(coeffs), values_(std::move(values)) {
  if (group_order_ == 0) throw ArgumentError("group order must be positive");
  const auto expected = cochain_size(group_order_, degree_);
  if (values_.size() != expected) {
    throw ArgumentError("degree-" + std::to_string(degree_) + " cochain needs " +
                        std::to_string(expected) + " values, got " +
                        std::to_string(values_.size()));
  }
  for (int v : values_) {
    if (v < 0 || v >= coeffs_.modulus()) {
      throw ArgumentError("cochain value " + std::to_string(v) + " not reduced mod " +
                          std::to_string(coeffs_.modulus()));
    }
  }
}

Cochain Cochain::zero(std::size_t group_order, int degree, CyclicCoefficients coeffs) {
  return Cochain(group_order, degree, coeffs,
                 std::vector<int>(cochain_size(group_order, degree), 0));
}

std::size_t Cochain::index_of(std::span<const Element> tuple) const {
  if (tuple.size() != static_cast<std::size_t>(degree_)) {
    throw ArgumentError("tuple length " + std::to_string(tuple.size()) +
                        " does not match cochain degree " + std::to_string(degree_));
  }
  std::size_t index = 0;
  for (Element g : tuple) {
    if (g >= group_order_) throw ArgumentError("tuple entry out of range");
    index = index * group_order_ + g;
  }
  return index;
}

Tuple Cochain::tuple_of(std::size_t index) const {
  Tuple tuple(static_cast<std::size_t>(degree_));
  for (int i = degree_ - 1; i >= 0; --i) {
    tuple[static_cast<std::size_t>(i)] = static_cast<Element>(index % group_order_);
    index /= group_order_;
  }
  return tuple;
}

void Cochain::check_compatible(const Cochain& other) const {
  if (group_order_ != other.group_order_ || degree_ != other.degree_ ||
      coeffs_ != other.coeffs_) {
    throw ArgumentError("cochains live in different groups M^p(G; Z/n)");
  }
}

Cochain Cochain::operator+(const Cochain& other) const {
  check_compatible(other);
  Cochain out = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    out.values_[i] = coeffs_.reduce(values_[i] + other.values_[i]);
  }
  return out;
}

Cochain Cochain::operator-(const Cochain& other) const {
  check_compatible(other);
  Cochain out = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    out.values_[i] = coeffs_.reduce(values_[i] - other.values_[i]);
  }
  return out;
}

Cochain Cochain::operator-() const {
  Cochain out = *this;
  for (auto& v : out.values_) v = coeffs_.reduce(-v);
  return out;
}

bool Cochain::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](int v) { return v == 0; });
}

Tuple face_map(const FiniteGroup& group, int p, int i, std::span<const Element> tuple) {
  if (p < 0) throw ArgumentError("face map degree must be >= 0");
  if (tuple.size() != static_cast<std::size_t>(p) + 1) {
    throw ArgumentError("face map d_i : G^(p+1) -> G^p needs a tuple of length p+1");
  }
  if (i < 0 || i > p + 1) {
    throw ArgumentError("face index " + std::to_string(i) + " outside 0.." + std::to_string(p + 1));
  }
  for (Element g : tuple) {
    if (g >= group.order()) throw ArgumentError("tuple entry out of range");
  }
  Tuple out;
  out.reserve(static_cast<std::size_t>(p));
  const auto len = tuple.size();
  if (i == 0) {
    out.assign(tuple.begin() + 1, tuple.end());
  } else if (i == p + 1) {
    out.assign(tuple.begin(), tuple.end() - 1);
  } else {
    const auto k = static_cast<std::size_t>(i);  // merge positions k-1, k (0-based)
    for (std::size_t j = 0; j < len; ++j) {
      if (j == k - 1) {
        out.push_back(group.mul(tuple[j], tuple[j + 1]));
        ++j;
      } else {
        out.push_back(tuple[j]);
      }
    }
  }
  return out;
}

Cochain delta(const FiniteGroup& group, const Cochain& c) {
  if (c.group_order() != group.order()) {
    throw ArgumentError("cochain and group have different orders");
  }
  const int p = c.degree();
  const auto m = group.order();
  const auto& coeffs = c.coefficients();
  const auto out_size = cochain_size(m, p + 1);
  std::vector<int> out(out_size);
  Tuple tuple(static_cast<std::size_t>(p) + 1);
  for (std::size_t index = 0; index < out_size; ++index) {
    std::size_t rest = index;
    for (int j = p; j >= 0; --j) {
      tuple[static_cast<std::size_t>(j)] = static_cast<Element>(rest % m);
      rest /= m;
    }
    std::int64_t sum = 0;
    for (int i = 0; i <= p + 1; ++i) {
      const auto face = face_map(group, p, i, tuple);
      const int value = c.at(face);
      sum += (i % 2 == 0) ? value : -value;
    }
    out[index] = coeffs.reduce(sum);
  }
  return Cochain(m, p + 1, coeffs, std::move(out));
}

Cochain delta_squared(const FiniteGroup& group, const Cochain& c) {
  return delta(group, delta(group, c));
}

std::optional<std::array<Element, 3>> find_cocycle_violation(const FiniteGroup& group,
                                                             const Cochain& c) {
  if (c.degree() != 2) throw ArgumentError("cocycle condition applies to degree-2 cochains");
  const auto dc = delta(group, c);
  for (std::size_t index = 0; index < dc.size(); ++index) {
    if (dc[index] != 0) {
      const auto t = dc.tuple_of(index);
      return std::array<Element, 3>{t[0], t[1], t[2]};
    }
  }
  return std::nullopt;
}

bool is_cocycle(const FiniteGroup& group, const Cochain& c) {
  return !find_cocycle_violation(group, c).has_value();
}

}  // namespace cext::group
