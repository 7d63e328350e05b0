#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fgv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncated series with different orders were combined.
class OrderMismatch : public Error {
 public:
  using Error::Error;
};

/// Constant term of a series is not a unit of the coefficient ring.
class NonInvertibleSeries : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Only the circle family of x^2 + y^2 is supported.
class UnsupportedOvalFamily : public Error {
 public:
  using Error::Error;
};

/// Not enough Francoise or Godbillon-Vey pairs for the requested order.
class InsufficientPairs : public Error {
 public:
  using Error::Error;
};

class NoFactorExists : public Error {
 public:
  using Error::Error;
};

/// The first-order coefficient of the first integral vanishes.
class DegenerateNormalization : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold by construction failed. Always a bug.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

class LeafEscapedAnnulus : public Error {
 public:
  using Error::Error;
};

class DenominatorVanished : public Error {
 public:
  using Error::Error;
};

}  // namespace fgv
