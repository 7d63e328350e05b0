#include "fgv/abelian.hpp"

#include <cmath>
#include <numbers>

namespace fgv {

namespace {

BivarPoly circle_hamiltonian() {
  return BivarPoly::monomial(Rational(1), 2, 0) + BivarPoly::monomial(Rational(1), 0, 2);
}

Rational double_factorial(unsigned n) {
  Integer r;
  mpz_2fac_ui(r.get_mpz_t(), n);
  return Rational(r);
}

}  // namespace

OvalFamily OvalFamily::circles() { return OvalFamily(circle_hamiltonian()); }

OvalFamily OvalFamily::from_hamiltonian(const BivarPoly& h) {
  if (!(h == circle_hamiltonian())) {
    throw UnsupportedOvalFamily("only F = x^2 + y^2 is supported, got " + h.to_string());
  }
  return OvalFamily(h);
}

double PeriodPoly::evaluate(double t) const { return std::numbers::pi * poly.evaluate(t); }

std::string PeriodPoly::to_string() const {
  if (poly.is_zero()) return "0";
  std::size_t nonzero = 0;
  for (const auto& c : poly.coeffs()) nonzero += (c != 0);
  if (nonzero == 1) {
    const bool negative = poly.leading() < 0;
    const std::string text = (negative ? -poly : poly).to_string('t');
    return std::string(negative ? "-" : "") + "π·" + text;
  }
  return "π·(" + poly.to_string('t') + ")";
}

Rational angular_mean(unsigned a, unsigned b) {
  if (a % 2 || b % 2) return Rational(0);
  // (a-1)!! (b-1)!! / (a+b)!!, with (-1)!! = 1
  const Rational num = (a ? double_factorial(a - 1) : Rational(1)) * (b ? double_factorial(b - 1) : Rational(1));
  return num / double_factorial(a + b);
}

PeriodPoly monomial_period(unsigned a, unsigned b, Differential basis) {
  // x = sqrt(t) cos, y = sqrt(t) sin, dx = -sqrt(t) sin dtheta, dy = sqrt(t) cos dtheta
  const unsigned total = a + b + 1;
  if (total % 2) return {};
  Rational mean = basis == Differential::dx ? -angular_mean(a, b + 1) : angular_mean(a + 1, b);
  if (mean == 0) return {};
  return {UniPoly::monomial(2 * mean, total / 2)};
}

PeriodPoly period_of_form(const PolyForm1& w, const OvalFamily& family) {
  (void)family;  // the circle family is the only one that exists
  PeriodPoly out;
  for (const auto& [m, c] : w.p.terms()) out = out + c * monomial_period(m.x, m.y, Differential::dx);
  for (const auto& [m, c] : w.q.terms()) out = out + c * monomial_period(m.x, m.y, Differential::dy);
  return out;
}

PeriodPoly angular_integral(const BivarPoly& s, const OvalFamily& family) {
  (void)family;
  PeriodPoly out;
  for (const auto& [m, c] : s.terms()) {
    const Rational mean = angular_mean(m.x, m.y);
    if (mean == 0) continue;
    out = out + PeriodPoly{UniPoly::monomial(2 * c * mean, m.degree() / 2)};
  }
  return out;
}

}  // namespace fgv
