#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "fgv/rational.hpp"

namespace fgv {

/// Exponent pair of x^a y^b.
struct Monomial {
  unsigned x = 0;
  unsigned y = 0;

  unsigned degree() const noexcept { return x + y; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lexicographic order with x > y: compare total degree first, then
/// the exponent of x.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.x < b.x;
  }
};

/// Exact polynomial in x and y over the rationals. Zero coefficients are
/// never stored, so structural equality is mathematical equality.
class BivarPoly {
 public:
  using Terms = std::map<Monomial, Rational, GradedLex>;

  BivarPoly() = default;
  explicit BivarPoly(const Rational& c);

  static BivarPoly constant(const Rational& c) { return BivarPoly(c); }
  static BivarPoly monomial(const Rational& c, unsigned a, unsigned b);
  static BivarPoly x() { return monomial(Rational(1), 1, 0); }
  static BivarPoly y() { return monomial(Rational(1), 0, 1); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Terms in ascending graded-lex order.
  const Terms& terms() const noexcept { return terms_; }
  Rational coeff(unsigned a, unsigned b) const;
  Rational constant_term() const { return coeff(0, 0); }
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const noexcept;
  unsigned degree_in_x() const noexcept;
  unsigned degree_in_y() const noexcept;
  /// Largest term in graded-lex order. Precondition: nonzero.
  std::pair<Monomial, Rational> leading_term() const;

  double evaluate(double x, double y) const;
  Rational evaluate(const Rational& x, const Rational& y) const;

  BivarPoly operator-() const;
  BivarPoly& operator+=(const BivarPoly& other);
  BivarPoly& operator-=(const BivarPoly& other);
  BivarPoly& operator*=(const BivarPoly& other);
  BivarPoly& operator*=(const Rational& c);
  /// Adds c * x^a y^b in place.
  void add_term(const Rational& c, unsigned a, unsigned b);

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(BivarPoly a, const Rational& c) { return a *= c; }
  friend BivarPoly operator*(const Rational& c, BivarPoly a) { return a *= c; }
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// Descending graded-lex text, e.g. "2/3x^3 + x y^2 - 1".
  std::string to_string() const;

 private:
  Terms terms_;
};

BivarPoly partial_x(const BivarPoly& p);
BivarPoly partial_y(const BivarPoly& p);
BivarPoly pow(const BivarPoly& p, unsigned exponent);

/// p / q when q divides p exactly, std::nullopt otherwise. Throws
/// std::domain_error when q is zero.
std::optional<BivarPoly> divide_exact(const BivarPoly& p, const BivarPoly& q);

/// Least common multiple of all coefficient denominators (1 for zero).
Integer denominator_lcm(const BivarPoly& p);

}  // namespace fgv
