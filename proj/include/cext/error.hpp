#pragma once

#include <stdexcept>
#include <string>

namespace cext {

// Base for every error the library raises. The CLI maps the concrete
// type to an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument to an operation: index out of range, shape mismatch.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Problem size exceeds the dense/enumeration guards.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A numerical result violated its own invariant (e.g. exp left SU(n)).
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. line/column are 1-based, 0 when not applicable.
class InputError : public Error {
 public:
  InputError(const std::string& what, int line = 0, int column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    if (line == 0) return what;
    std::string s = "line " + std::to_string(line);
    if (column != 0) s += ", column " + std::to_string(column);
    return s + ": " + what;
  }

  int line_;
  int column_;
};

}  // namespace cext
