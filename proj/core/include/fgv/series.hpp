#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fgv/bivar_poly.hpp"
#include "fgv/errors.hpp"
#include "fgv/rational_function.hpp"

namespace fgv {

template <class R>
concept CoefficientRing = requires(const R& a, const R& b, const Rational& c) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { R(c) };
  { partial_x(a) } -> std::convertible_to<R>;
  { partial_y(a) } -> std::convertible_to<R>;
};

/// Multiplicative inverse inside the coefficient ring, if one exists.
inline std::optional<BivarPoly> ring_inverse(const BivarPoly& p) {
  if (p.is_zero() || !p.is_constant()) return std::nullopt;
  return BivarPoly(1 / p.constant_term());
}

inline std::optional<RationalFunction> ring_inverse(const RationalFunction& f) {
  if (f.is_zero()) return std::nullopt;
  return RationalFunction(f.denominator(), f.numerator());
}

/// Power series in eps truncated at an explicit order K (inclusive): the
/// coefficients c_0..c_K are always stored, zeros included. Combining series
/// of different order throws OrderMismatch.
template <CoefficientRing R>
class EpsSeries {
 public:
  explicit EpsSeries(unsigned order) : coeffs_(order + 1) {}
  EpsSeries(unsigned order, std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
  }
  static EpsSeries constant(unsigned order, R c) {
    EpsSeries s(order);
    s.coeffs_[0] = std::move(c);
    return s;
  }
  static EpsSeries one(unsigned order) { return constant(order, R(Rational(1))); }

  unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
  const R& operator[](unsigned i) const { return coeffs_.at(i); }
  R& operator[](unsigned i) { return coeffs_.at(i); }
  /// Coefficient of eps^i, zero beyond the truncation order.
  R coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : R(); }
  const std::vector<R>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  /// Same coefficients re-truncated (or zero-padded) at a new order.
  EpsSeries with_order(unsigned order) const { return EpsSeries(order, coeffs_); }

  EpsSeries operator-() const {
    EpsSeries out(order());
    for (unsigned i = 0; i <= order(); ++i) out.coeffs_[i] = -coeffs_[i];
    return out;
  }
  EpsSeries& operator+=(const EpsSeries& o) {
    check(o);
    for (unsigned i = 0; i <= order(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return *this;
  }
  EpsSeries& operator-=(const EpsSeries& o) {
    check(o);
    for (unsigned i = 0; i <= order(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return *this;
  }
  friend EpsSeries operator+(EpsSeries a, const EpsSeries& b) { return a += b; }
  friend EpsSeries operator-(EpsSeries a, const EpsSeries& b) { return a -= b; }

  /// Cauchy product truncated at the shared order.
  friend EpsSeries operator*(const EpsSeries& a, const EpsSeries& b) {
    a.check(b);
    EpsSeries out(a.order());
    for (unsigned i = 0; i <= a.order(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (unsigned j = 0; i + j <= a.order(); ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }
  /// Coefficientwise product with a ring element.
  friend EpsSeries operator*(const R& c, const EpsSeries& s) {
    EpsSeries out(s.order());
    for (unsigned i = 0; i <= s.order(); ++i) out.coeffs_[i] = c * s.coeffs_[i];
    return out;
  }
  friend bool operator==(const EpsSeries& a, const EpsSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Multiplies by eps^k, dropping what falls past the order.
  EpsSeries shifted(unsigned k) const {
    EpsSeries out(order());
    for (unsigned i = 0; i + k <= order(); ++i) out.coeffs_[i + k] = coeffs_[i];
    return out;
  }

  /// d/deps; the top coefficient of the result is zero (its source c_{K+1}
  /// lies past the truncation).
  EpsSeries derivative() const {
    EpsSeries out(order());
    for (unsigned i = 0; i < order(); ++i) {
      out.coeffs_[i] = R(Rational(i + 1)) * coeffs_[i + 1];
    }
    return out;
  }

 private:
  void check(const EpsSeries& o) const {
    if (o.order() != order()) {
      throw OrderMismatch("series orders differ: " + std::to_string(order()) + " vs " +
                          std::to_string(o.order()));
    }
  }

  std::vector<R> coeffs_;
};

/// Inverse series by the recurrence b_0 = 1/c_0, b_n = -b_0 * sum c_i b_{n-i}.
/// Throws NonInvertibleSeries when c_0 is not a unit of the coefficient ring
/// (for polynomial coefficients lift to RationalFunction first).
template <CoefficientRing R>
EpsSeries<R> invert(const EpsSeries<R>& s) {
  auto inv0 = ring_inverse(s[0]);
  if (!inv0) {
    throw NonInvertibleSeries(s[0].is_zero() ? "constant term is zero"
                                             : "constant term is not a unit of the coefficient ring");
  }
  const unsigned k = s.order();
  EpsSeries<R> out(k);
  out[0] = *inv0;
  for (unsigned n = 1; n <= k; ++n) {
    R acc;
    for (unsigned i = 1; i <= n; ++i) {
      if (s[i].is_zero() || out[n - i].is_zero()) continue;
      acc = acc + s[i] * out[n - i];
    }
    out[n] = -(*inv0 * acc);
  }
  return out;
}

inline EpsSeries<RationalFunction> lift(const EpsSeries<BivarPoly>& s) {
  EpsSeries<RationalFunction> out(s.order());
  for (unsigned i = 0; i <= s.order(); ++i) out[i] = RationalFunction(s[i]);
  return out;
}

}  // namespace fgv
