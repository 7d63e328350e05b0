#pragma once

#include <string>

#include "fgv/exterior.hpp"
#include "fgv/uni_poly.hpp"

namespace fgv {

/// Family of cycles gamma(t) = {H = t}, t > 0, traversed counterclockwise.
/// Only H = x^2 + y^2 is supported.
class OvalFamily {
 public:
  /// The circle family of x^2 + y^2.
  static OvalFamily circles();
  /// Throws UnsupportedOvalFamily unless h == x^2 + y^2.
  static OvalFamily from_hamiltonian(const BivarPoly& h);

  const BivarPoly& hamiltonian() const noexcept { return hamiltonian_; }
  PolyForm1 dF() const { return differential(hamiltonian_); }

 private:
  explicit OvalFamily(BivarPoly h) : hamiltonian_(std::move(h)) {}
  BivarPoly hamiltonian_;
};

/// pi * poly(t): the exact value of an Abelian integral over gamma(t).
struct PeriodPoly {
  UniPoly poly;

  bool is_zero() const noexcept { return poly.is_zero(); }
  double evaluate(double t) const;

  PeriodPoly operator-() const { return {-poly}; }
  friend PeriodPoly operator+(const PeriodPoly& a, const PeriodPoly& b) { return {a.poly + b.poly}; }
  friend PeriodPoly operator-(const PeriodPoly& a, const PeriodPoly& b) { return {a.poly - b.poly}; }
  friend PeriodPoly operator*(const Rational& c, const PeriodPoly& a) { return {c * a.poly}; }
  friend bool operator==(const PeriodPoly&, const PeriodPoly&) = default;

  /// "0", "π·t", "-π·1/4t^2", "π·(t^2 + t)".
  std::string to_string() const;
};

enum class Differential { dx, dy };

/// Integral over [0, 2pi] of cos^a sin^b, divided by 2pi (exact; zero unless
/// both exponents are even).
Rational angular_mean(unsigned a, unsigned b);

/// Exact value of the integral of x^a y^b d(basis) over gamma(t).
PeriodPoly monomial_period(unsigned a, unsigned b, Differential basis);

/// Linear extension of monomial_period over the 1-form.
PeriodPoly period_of_form(const PolyForm1& w, const OvalFamily& family);

/// Integral over theta in [0, 2pi] of s(sqrt(t) cos theta, sqrt(t) sin theta).
PeriodPoly angular_integral(const BivarPoly& s, const OvalFamily& family);

}  // namespace fgv
