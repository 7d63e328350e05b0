#include "fgv/bivar_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fgv {
namespace {

// GMP arithmetic assumes canonical operands; callers may hand us 4/2.
Rational canonical(const Rational& c) {
  Rational out = c;
  out.canonicalize();
  return out;
}

}  // namespace

BivarPoly::BivarPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{0, 0}, canonical(c));
}

BivarPoly BivarPoly::monomial(const Rational& c, unsigned a, unsigned b) {
  BivarPoly p;
  if (c != 0) p.terms_.emplace(Monomial{a, b}, canonical(c));
  return p;
}

bool BivarPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rational BivarPoly::coeff(unsigned a, unsigned b) const {
  auto it = terms_.find(Monomial{a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BivarPoly::total_degree() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
}

unsigned BivarPoly::degree_in_x() const noexcept {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x);
  return d;
}

unsigned BivarPoly::degree_in_y() const noexcept {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.y);
  return d;
}

std::pair<Monomial, Rational> BivarPoly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

double BivarPoly::evaluate(double x, double y) const {
  double acc = 0.0;
  for (const auto& [m, c] : terms_) {
    acc += c.get_d() * std::pow(x, m.x) * std::pow(y, m.y);
  }
  return acc;
}

Rational BivarPoly::evaluate(const Rational& x, const Rational& y) const {
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    acc += c * power(x, static_cast<int>(m.x)) * power(y, static_cast<int>(m.y));
  }
  return acc;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

void BivarPoly::add_term(const Rational& c, unsigned a, unsigned b) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Monomial{a, b}, canonical(c));
  if (!inserted) {
    it->second += canonical(c);
    if (it->second == 0) terms_.erase(it);
  }
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(c, m.x, m.y);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(-c, m.x, m.y);
  return *this;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& other) {
  *this = *this * other;
  return *this;
}

BivarPoly& BivarPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(ca * cb, ma.x + mb.x, ma.y + mb.y);
    }
  }
  return out;
}

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.degree() == 0 || mag != 1) os << fgv::to_string(mag);
    if (m.x > 0) {
      os << 'x';
      if (m.x > 1) os << '^' << m.x;
    }
    if (m.y > 0) {
      if (m.x > 0) os << ' ';
      os << 'y';
      if (m.y > 1) os << '^' << m.y;
    }
  }
  return os.str();
}

BivarPoly partial_x(const BivarPoly& p) {
  BivarPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.x > 0) out.add_term(c * m.x, m.x - 1, m.y);
  }
  return out;
}

BivarPoly partial_y(const BivarPoly& p) {
  BivarPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.y > 0) out.add_term(c * m.y, m.x, m.y - 1);
  }
  return out;
}

BivarPoly pow(const BivarPoly& p, unsigned exponent) {
  BivarPoly result(Rational(1));
  BivarPoly base = p;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::optional<BivarPoly> divide_exact(const BivarPoly& p, const BivarPoly& q) {
  if (q.is_zero()) throw std::domain_error("polynomial division by zero");
  if (p.is_zero()) return BivarPoly();
  const auto [lm, lc] = q.leading_term();
  BivarPoly remainder = p;
  BivarPoly quotient;
  while (!remainder.is_zero()) {
    const auto [rm, rc] = remainder.leading_term();
    if (rm.x < lm.x || rm.y < lm.y) return std::nullopt;
    BivarPoly step = BivarPoly::monomial(rc / lc, rm.x - lm.x, rm.y - lm.y);
    quotient += step;
    remainder -= step * q;
  }
  return quotient;
}

Integer denominator_lcm(const BivarPoly& p) {
  Integer l = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  return l;
}

}  // namespace fgv
