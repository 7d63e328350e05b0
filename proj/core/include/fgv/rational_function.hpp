#pragma once

#include <string>

#include "fgv/bivar_poly.hpp"

namespace fgv {

/// Quotient of bivariate polynomials kept in canonical form: numerator and
/// denominator coprime, denominator with graded-lex leading coefficient 1.
/// Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  explicit RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
  explicit RationalFunction(BivarPoly numerator)
      : num_(std::move(numerator)), den_(Rational(1)) {}
  /// Throws std::domain_error on a zero denominator.
  RationalFunction(BivarPoly numerator, BivarPoly denominator);

  const BivarPoly& numerator() const noexcept { return num_; }
  const BivarPoly& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }

  double evaluate(double x, double y) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "p" for polynomials, "(p)/(q)" otherwise.
  std::string to_string() const;

 private:
  struct Canonical {};
  RationalFunction(BivarPoly n, BivarPoly d, Canonical)
      : num_(std::move(n)), den_(std::move(d)) {}
  void normalize();

  BivarPoly num_;
  BivarPoly den_;
};

/// Re-canonicalizes an arbitrary numerator/denominator pair; idempotent.
RationalFunction normalize(const RationalFunction& f);

RationalFunction partial_x(const RationalFunction& f);
RationalFunction partial_y(const RationalFunction& f);

}  // namespace fgv
