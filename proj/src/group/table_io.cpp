#include "cext/group/table_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "cext/error.hpp"

namespace cext::group {

namespace {

// Whitespace tokenizer that remembers where each token started.
class Tokens {
 public:
  explicit Tokens(std::istream& in) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        const auto start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        tokens_.push_back({line.substr(start, i - start), line_no, static_cast<int>(start) + 1});
      }
    }
    last_line_ = line_no;
  }

  bool done() const { return pos_ >= tokens_.size(); }
  int line() const { return done() ? last_line_ : tokens_[pos_].line; }

  long long next_integer(const std::string& what) {
    if (done()) throw InputError("unexpected end of input, expected " + what, last_line_ + 1);
    const auto& t = tokens_[pos_++];
    long long value = 0;
    std::size_t used = 0;
    try {
      value = std::stoll(t.text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.text.size()) {
      throw InputError("expected " + what + ", found '" + t.text + "'", t.line, t.column);
    }
    return value;
  }

  [[noreturn]] void error_at_current(const std::string& what) const {
    const auto& t = tokens_[pos_ - 1];
    throw InputError(what, t.line, t.column);
  }

  void expect_end() const {
    if (!done()) {
      const auto& t = tokens_[pos_];
      throw InputError("trailing token '" + t.text + "'", t.line, t.column);
    }
  }

 private:
  struct Token {
    std::string text;
    int line;
    int column;
  };
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int last_line_ = 0;
};

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

FiniteGroup read_group_table(std::istream& in, const std::string& name) {
  Tokens tokens(in);
  const auto m = tokens.next_integer("group order");
  if (m < 1) tokens.error_at_current("group order must be positive");
  if (m > 4096) tokens.error_at_current("group order too large");
  std::vector<Element> table;
  table.reserve(static_cast<std::size_t>(m * m));
  for (long long i = 0; i < m * m; ++i) {
    const auto v = tokens.next_integer("element index");
    if (v < 0 || v >= m) tokens.error_at_current("element index out of range 0.." + std::to_string(m - 1));
    table.push_back(static_cast<Element>(v));
  }
  tokens.expect_end();
  try {
    return FiniteGroup(static_cast<std::size_t>(m), std::move(table), name);
  } catch (const ArgumentError& e) {
    throw InputError(std::string("not a group table: ") + e.what());
  }
}

FiniteGroup read_group_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_group_table(in, path.stem().string());
}

void write_group_table(std::ostream& out, const FiniteGroup& group) {
  const auto m = group.order();
  out << m << '\n';
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t h = 0; h < m; ++h) {
      if (h) out << ' ';
      out << group.mul(static_cast<Element>(g), static_cast<Element>(h));
    }
    out << '\n';
  }
}

Cochain read_cochain(std::istream& in, std::size_t group_order) {
  Tokens tokens(in);
  const auto p = tokens.next_integer("cochain degree");
  if (p < 0 || p > 3) tokens.error_at_current("cochain degree must be in 0..3");
  const auto n = tokens.next_integer("modulus");
  if (n < 1) tokens.error_at_current("modulus must be positive");
  const CyclicCoefficients coeffs(static_cast<int>(n));
  const auto size = cochain_size(group_order, static_cast<int>(p));
  std::vector<int> values;
  values.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    const auto v = tokens.next_integer("cochain value");
    if (v < 0 || v >= n) tokens.error_at_current("cochain value out of range 0.." + std::to_string(n - 1));
    values.push_back(static_cast<int>(v));
  }
  tokens.expect_end();
  return Cochain(group_order, static_cast<int>(p), coeffs, std::move(values));
}

Cochain read_cochain_file(const std::filesystem::path& path, std::size_t group_order) {
  auto in = open(path);
  return read_cochain(in, group_order);
}

void write_cochain(std::ostream& out, const Cochain& c) {
  out << c.degree() << ' ' << c.modulus() << '\n';
  const auto row = c.degree() == 0 ? std::size_t{1} : c.group_order();
  for (std::size_t i = 0; i < c.size(); ++i) {
    out << c[i] << ((i + 1) % row == 0 ? '\n' : ' ');
  }
}

}  // namespace cext::group
