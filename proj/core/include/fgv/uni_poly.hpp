#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fgv/rational.hpp"

namespace fgv {

/// Dense univariate polynomial with rational coefficients. Coefficients are
/// stored lowest degree first with no trailing zeros, so the zero polynomial
/// has an empty coefficient vector.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, unsigned degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const;
  Rational coeff(unsigned i) const;
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  double evaluate(double t) const;
  Rational evaluate(const Rational& t) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Text in the polynomial grammar with the given variable name.
  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd (zero when both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

UniPoly make_monic(const UniPoly& p);

}  // namespace fgv
