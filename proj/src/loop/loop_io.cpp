#include "cext/loop/loop_io.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <string>

#include "cext/error.hpp"

namespace cext::loop {

namespace {

template <typename T>
T next(std::istream& in, const std::string& what, std::size_t index) {
  T value{};
  if (!(in >> value)) {
    throw InputError("could not read " + what + " (value " + std::to_string(index + 1) + ")");
  }
  return value;
}

}  // namespace

DiscreteLoop read_loop(std::istream& in) {
  const auto n = next<long long>(in, "dimension n", 0);
  const auto count = next<long long>(in, "sample count N", 1);
  if (n < 1 || n > 16) throw InputError("dimension out of range 1..16", 1);
  if (count < 16 || count > (1 << 20)) throw InputError("sample count out of range", 1);
  const auto dim = static_cast<int>(n);
  std::vector<GroupElement> samples;
  samples.reserve(static_cast<std::size_t>(count));
  std::size_t read = 2;
  for (long long j = 0; j < count; ++j) {
    Matrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) {
        const double re = next<double>(in, "real part", read++);
        const double im = next<double>(in, "imaginary part", read++);
        m(r, c) = lie::Complex(re, im);
      }
    }
    try {
      samples.emplace_back(std::move(m));
    } catch (const ArgumentError& e) {
      throw InputError("sample " + std::to_string(j) + ": " + e.what());
    }
  }
  std::string extra;
  if (in >> extra) throw InputError("trailing data '" + extra + "'");
  try {
    return DiscreteLoop(dim, std::move(samples));
  } catch (const ArgumentError& e) {
    throw InputError(e.what());
  }
}

DiscreteLoop read_loop_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return read_loop(in);
}

void write_loop(std::ostream& out, const DiscreteLoop& loop) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << loop.dim() << ' ' << loop.size() << '\n' << std::setprecision(17);
  for (const auto& g : loop.samples()) {
    const auto& m = g.matrix();
    for (int r = 0; r < loop.dim(); ++r) {
      for (int c = 0; c < loop.dim(); ++c) {
        if (c) out << "  ";
        out << m(r, c).real() << ' ' << m(r, c).imag();
      }
      out << '\n';
    }
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace cext::loop
