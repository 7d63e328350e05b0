#include "fgv/rational_function.hpp"

#include <stdexcept>

#include "fgv/poly_gcd.hpp"

namespace fgv {

RationalFunction::RationalFunction(BivarPoly numerator, BivarPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = BivarPoly(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    const BivarPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      auto n = divide_exact(num_, g);
      auto d = divide_exact(den_, g);
      if (!n || !d) throw InternalConsistencyError("gcd does not divide its arguments");
      num_ = std::move(*n);
      den_ = std::move(*d);
    }
  }
  const Rational lc = den_.leading_term().second;
  if (lc != 1) {
    const Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction normalize(const RationalFunction& f) {
  return RationalFunction(f.numerator(), f.denominator());
}

double RationalFunction::evaluate(double x, double y) const {
  return num_.evaluate(x, y) / den_.evaluate(x, y);
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(-num_, den_, Canonical{});
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    *this = RationalFunction(num_ + o.num_, den_);
  } else {
    *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) {
    *this = RationalFunction();
  } else if (is_polynomial() && o.is_polynomial()) {
    *this = RationalFunction(num_ * o.num_, den_ * o.den_);
  } else {
    // Cross-cancel before multiplying to keep intermediate sizes small.
    const BivarPoly g1 = gcd(num_, o.den_);
    const BivarPoly g2 = gcd(o.num_, den_);
    BivarPoly n = *divide_exact(num_, g1) * *divide_exact(o.num_, g2);
    BivarPoly d = *divide_exact(den_, g2) * *divide_exact(o.den_, g1);
    *this = RationalFunction(std::move(n), std::move(d));
  }
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  return *this *= RationalFunction(o.den_, o.num_);
}

std::string RationalFunction::to_string() const {
  if (den_ == BivarPoly(Rational(1))) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction partial_x(const RationalFunction& f) {
  const auto& n = f.numerator();
  const auto& d = f.denominator();
  if (d.is_constant()) return RationalFunction(partial_x(n), d);
  return RationalFunction(partial_x(n) * d - n * partial_x(d), d * d);
}

RationalFunction partial_y(const RationalFunction& f) {
  const auto& n = f.numerator();
  const auto& d = f.denominator();
  if (d.is_constant()) return RationalFunction(partial_y(n), d);
  return RationalFunction(partial_y(n) * d - n * partial_y(d), d * d);
}

}  // namespace fgv
