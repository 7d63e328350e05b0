#include "fgv/uni_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace fgv {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational& c, unsigned degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return UniPoly(std::move(coeffs));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero");
  return coeffs_.back();
}

Rational UniPoly::coeff(unsigned i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

double UniPoly::evaluate(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + it->get_d();
  }
  return acc;
}

Rational UniPoly::evaluate(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << fgv::to_string(mag);
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  UniPoly rem = a;
  std::vector<Rational> quot;
  const int db = b.degree();
  if (rem.degree() >= db) quot.resize(static_cast<std::size_t>(rem.degree() - db + 1));
  while (!rem.is_zero() && rem.degree() >= db) {
    const int shift = rem.degree() - db;
    Rational factor = rem.leading() / b.leading();
    quot[static_cast<std::size_t>(shift)] = factor;
    rem -= UniPoly::monomial(factor, static_cast<unsigned>(shift)) * b;
  }
  return {UniPoly(std::move(quot)), rem};
}

UniPoly make_monic(const UniPoly& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading());
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

}  // namespace fgv
