#pragma once

#include <array>
#include <bit>
#include <string>

#include "fgv/series.hpp"

namespace fgv {

/// p dx + q dy.
template <CoefficientRing R>
struct Form1Planar {
  R p;
  R q;

  bool is_zero() const { return p.is_zero() && q.is_zero(); }
  Form1Planar operator-() const { return {-p, -q}; }
  friend Form1Planar operator+(const Form1Planar& a, const Form1Planar& b) { return {a.p + b.p, a.q + b.q}; }
  friend Form1Planar operator-(const Form1Planar& a, const Form1Planar& b) { return {a.p - b.p, a.q - b.q}; }
  friend Form1Planar operator*(const R& f, const Form1Planar& w) { return {f * w.p, f * w.q}; }
  friend bool operator==(const Form1Planar&, const Form1Planar&) = default;
};

/// h dx^dy.
template <CoefficientRing R>
struct Form2Planar {
  R h;

  bool is_zero() const { return h.is_zero(); }
  friend Form2Planar operator+(const Form2Planar& a, const Form2Planar& b) { return {a.h + b.h}; }
  friend Form2Planar operator-(const Form2Planar& a, const Form2Planar& b) { return {a.h - b.h}; }
  friend bool operator==(const Form2Planar&, const Form2Planar&) = default;
};

using PolyForm1 = Form1Planar<BivarPoly>;
using PolyForm2 = Form2Planar<BivarPoly>;
using RatForm1 = Form1Planar<RationalFunction>;
using RatForm2 = Form2Planar<RationalFunction>;

template <CoefficientRing R>
Form1Planar<R> differential(const R& f) {
  return {partial_x(f), partial_y(f)};
}

/// d(p dx + q dy) = (dq/dx - dp/dy) dx^dy.
template <CoefficientRing R>
Form2Planar<R> d_planar(const Form1Planar<R>& w) {
  return {partial_x(w.q) - partial_y(w.p)};
}

template <CoefficientRing R>
Form2Planar<R> wedge(const Form1Planar<R>& a, const Form1Planar<R>& b) {
  return {a.p * b.q - a.q * b.p};
}

template <CoefficientRing R>
Form2Planar<R> operator*(const R& f, const Form2Planar<R>& w) {
  return {f * w.h};
}

inline RatForm1 lift(const PolyForm1& w) { return {RationalFunction(w.p), RationalFunction(w.q)}; }

/// "(p) dx + (q) dy"
template <CoefficientRing R>
std::string to_string(const Form1Planar<R>& w) {
  return "(" + w.p.to_string() + ") dx + (" + w.q.to_string() + ") dy";
}

/// Basis covectors as bits; a basis monomial is an OR of these, always read
/// in the canonical order dx < dy < deps.
enum Covector : unsigned { kDx = 1u, kDy = 2u, kDeps = 4u };
inline constexpr unsigned kBasisCount = 8;

/// Largest weight kept by a truncation: terms of weight > k are discarded.
struct WeightBound {
  unsigned k = 0;
};

/// Weight of eps^i times a basis monomial: i, plus one when deps is present.
constexpr unsigned term_weight(unsigned eps_power, unsigned basis) noexcept {
  return eps_power + ((basis & kDeps) ? 1u : 0u);
}

/// Sign of e_a ^ e_b rewritten in canonical order (0 when they share a
/// covector).
constexpr int basis_wedge_sign(unsigned a, unsigned b) noexcept {
  if (a & b) return 0;
  int swaps = 0;
  for (unsigned v = 0; v < 3; ++v) {
    if (!(b & (1u << v))) continue;
    // covectors of a that sit after v must hop over it
    swaps += std::popcount(a >> (v + 1));
  }
  return (swaps % 2) ? -1 : 1;
}

/// Differential form on (x, y, eps)-space whose components are eps-series.
/// A form of order K keeps exactly the terms of weight <= K: the eps^K
/// coefficient of every deps-component is always zero. Total differential
/// and wedge both respect weight, so every stored term is exact.
template <CoefficientRing R>
class FormEps {
 public:
  explicit FormEps(unsigned order) : order_(order) {
    for (auto& c : comps_) c = EpsSeries<R>(order);
  }

  static FormEps scalar(const EpsSeries<R>& f) {
    FormEps out(f.order());
    out.set(0, f);
    return out;
  }
  /// eps-independent planar 1-form.
  static FormEps planar(const Form1Planar<R>& w, unsigned order) {
    FormEps out(order);
    out.comps_[kDx][0] = w.p;
    out.comps_[kDy][0] = w.q;
    return out;
  }
  /// eps^power * coeff * basis.
  static FormEps term(unsigned basis, unsigned power, const R& coeff, unsigned order) {
    FormEps out(order);
    if (term_weight(power, basis) <= order) out.comps_[basis][power] = coeff;
    return out;
  }

  unsigned order() const noexcept { return order_; }
  const EpsSeries<R>& operator[](unsigned basis) const { return comps_.at(basis); }
  void set(unsigned basis, EpsSeries<R> series) {
    if (series.order() != order_) throw OrderMismatch("component order differs from form order");
    comps_.at(basis) = std::move(series);
    if (basis & kDeps) comps_[basis][order_] = R();
  }

  bool is_zero() const {
    for (const auto& c : comps_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  FormEps operator-() const {
    FormEps out(order_);
    for (unsigned b = 0; b < kBasisCount; ++b) out.comps_[b] = -comps_[b];
    return out;
  }
  friend FormEps operator+(const FormEps& a, const FormEps& b) {
    a.check(b);
    FormEps out(a.order_);
    for (unsigned i = 0; i < kBasisCount; ++i) out.comps_[i] = a.comps_[i] + b.comps_[i];
    return out;
  }
  friend FormEps operator-(const FormEps& a, const FormEps& b) { return a + (-b); }
  friend bool operator==(const FormEps& a, const FormEps& b) {
    return a.order_ == b.order_ && a.comps_ == b.comps_;
  }

  /// Graded-antisymmetric product, truncated at the shared order. Products
  /// beyond degree 3 vanish.
  friend FormEps wedge(const FormEps& u, const FormEps& v) {
    u.check(v);
    FormEps out(u.order_);
    for (unsigned a = 0; a < kBasisCount; ++a) {
      if (u.comps_[a].is_zero()) continue;
      for (unsigned b = 0; b < kBasisCount; ++b) {
        const int sign = basis_wedge_sign(a, b);
        if (sign == 0 || v.comps_[b].is_zero()) continue;
        EpsSeries<R> prod = u.comps_[a] * v.comps_[b];
        if (sign < 0) prod = -prod;
        out.comps_[a | b] += prod;
      }
    }
    out.enforce_weight();
    return out;
  }

  friend FormEps operator*(const EpsSeries<R>& f, const FormEps& u) { return wedge(scalar(f.with_order(u.order_)), u); }

  /// Total differential in x, y and eps.
  friend FormEps d_total(const FormEps& u) {
    FormEps out(u.order_);
    for (unsigned s = 0; s < kBasisCount; ++s) {
      const EpsSeries<R>& c = u.comps_[s];
      if (c.is_zero()) continue;
      if (!(s & kDx)) {
        EpsSeries<R> dc(u.order_);
        for (unsigned i = 0; i <= u.order_; ++i) dc[i] = partial_x(c[i]);
        out.accumulate(kDx, s, dc);
      }
      if (!(s & kDy)) {
        EpsSeries<R> dc(u.order_);
        for (unsigned i = 0; i <= u.order_; ++i) dc[i] = partial_y(c[i]);
        out.accumulate(kDy, s, dc);
      }
      if (!(s & kDeps)) out.accumulate(kDeps, s, c.derivative());
    }
    out.enforce_weight();
    return out;
  }

  /// Drops every term of weight > w.k.
  friend FormEps truncate_weight(const FormEps& u, WeightBound w) {
    FormEps out = u;
    for (unsigned b = 0; b < kBasisCount; ++b) {
      for (unsigned i = 0; i <= u.order_; ++i) {
        if (term_weight(i, b) > w.k) out.comps_[b][i] = R();
      }
    }
    return out;
  }

  /// True iff every term of weight <= w.k vanishes.
  friend bool is_zero_mod_weight(const FormEps& u, WeightBound w) {
    for (unsigned b = 0; b < kBasisCount; ++b) {
      for (unsigned i = 0; i <= u.order_; ++i) {
        if (term_weight(i, b) <= w.k && !u.comps_[b][i].is_zero()) return false;
      }
    }
    return true;
  }

  /// Same terms, re-truncated at a new order (weights above it dropped).
  FormEps with_order(unsigned order) const {
    FormEps out(order);
    for (unsigned b = 0; b < kBasisCount; ++b) out.comps_[b] = comps_[b].with_order(order);
    out.enforce_weight();
    return out;
  }

  /// eps-coefficient of a basis component as a planar 1-form (dx, dy parts).
  Form1Planar<R> planar_part(unsigned eps_power) const {
    return {comps_[kDx].coeff(eps_power), comps_[kDy].coeff(eps_power)};
  }

 private:
  void check(const FormEps& o) const {
    if (o.order_ != order_) throw OrderMismatch("forms have different truncation orders");
  }
  void accumulate(unsigned v, unsigned s, const EpsSeries<R>& c) {
    const int sign = basis_wedge_sign(v, s);
    if (sign > 0) {
      comps_[v | s] += c;
    } else {
      comps_[v | s] -= c;
    }
  }
  void enforce_weight() {
    for (unsigned b = 0; b < kBasisCount; ++b) {
      if (b & kDeps) comps_[b][order_] = R();
    }
  }

  unsigned order_;
  std::array<EpsSeries<R>, kBasisCount> comps_ = {EpsSeries<R>(0), EpsSeries<R>(0), EpsSeries<R>(0), EpsSeries<R>(0),
                                                 EpsSeries<R>(0), EpsSeries<R>(0), EpsSeries<R>(0), EpsSeries<R>(0)};
};

using PolyFormEps = FormEps<BivarPoly>;

inline const char* basis_name(unsigned basis) {
  static constexpr const char* kNames[kBasisCount] = {"1",     "dx",     "dy",     "dx^dy",
                                                      "deps",  "dx^deps", "dy^deps", "dx^dy^deps"};
  return kNames[basis];
}

/// Nonzero terms as "(c) eps^i basis" joined by " + ".
template <CoefficientRing R>
std::string to_string(const FormEps<R>& u) {
  std::string out;
  for (unsigned b = 0; b < kBasisCount; ++b) {
    for (unsigned i = 0; i <= u.order(); ++i) {
      const R& c = u[b][i];
      if (c.is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")";
      if (i == 1) out += " eps";
      if (i > 1) out += " eps^" + std::to_string(i);
      if (b != 0) out += std::string(" ") + basis_name(b);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace fgv
