// Bivariate gcd over Q: view polynomials in Q[y][x] and run the subresultant
// pseudo-remainder sequence in x, taking contents in Q[y] by Euclid.
#include <stdexcept>
#include <vector>

#include "fgv/bivar_poly.hpp"
#include "fgv/poly_gcd.hpp"
#include "fgv/uni_poly.hpp"

namespace fgv {
namespace {

using XPoly = std::vector<UniPoly>;  // index = power of x

XPoly to_xpoly(const BivarPoly& p) {
  XPoly out(p.is_zero() ? 0 : p.degree_in_x() + 1);
  std::vector<std::vector<Rational>> dense(out.size());
  for (const auto& [m, c] : p.terms()) {
    auto& row = dense[m.x];
    if (row.size() <= m.y) row.resize(m.y + 1);
    row[m.y] = c;
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = UniPoly(std::move(dense[i]));
  return out;
}

BivarPoly from_xpoly(const XPoly& p) {
  BivarPoly out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& cs = p[i].coeffs();
    for (std::size_t j = 0; j < cs.size(); ++j) {
      out.add_term(cs[j], static_cast<unsigned>(i), static_cast<unsigned>(j));
    }
  }
  return out;
}

void trim(XPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int xdeg(const XPoly& p) { return static_cast<int>(p.size()) - 1; }

UniPoly content(const XPoly& p) {
  UniPoly g;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalConsistencyError("inexact division in Q[y]");
  return q;
}

XPoly divide_coeffs(const XPoly& p, const UniPoly& d) {
  XPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(exact_div(c, d));
  return out;
}

UniPoly upow(const UniPoly& base, unsigned e) {
  UniPoly r = UniPoly::constant(Rational(1));
  for (unsigned i = 0; i < e; ++i) r = r * base;
  return r;
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed in Q[y][x].
XPoly pseudo_remainder(XPoly a, const XPoly& b) {
  const int db = xdeg(b);
  const UniPoly& lb = b.back();
  int steps = 0;
  const int delta = xdeg(a) - db;
  while (!a.empty() && xdeg(a) >= db) {
    const UniPoly la = a.back();
    const auto shift = static_cast<std::size_t>(xdeg(a) - db);
    for (auto& c : a) c = c * lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    trim(a);
    ++steps;
  }
  const UniPoly fix = upow(lb, static_cast<unsigned>(delta + 1 - steps));
  for (auto& c : a) c = c * fix;
  trim(a);
  return a;
}

XPoly primitive_gcd(XPoly a, XPoly b) {
  if (xdeg(a) < xdeg(b)) std::swap(a, b);
  UniPoly g = UniPoly::constant(Rational(1));
  UniPoly h = UniPoly::constant(Rational(1));
  while (true) {
    const int d = xdeg(a) - xdeg(b);
    XPoly r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (xdeg(r) == 0) return {UniPoly::constant(Rational(1))};
    a = std::move(b);
    b = divide_coeffs(r, g * upow(h, static_cast<unsigned>(d)));
    g = a.back();
    if (d == 0) {
      // h unchanged
    } else {
      h = exact_div(upow(g, static_cast<unsigned>(d)), upow(h, static_cast<unsigned>(d - 1)));
    }
  }
  return divide_coeffs(b, content(b));
}

}  // namespace

BivarPoly gcd(const BivarPoly& p, const BivarPoly& q) {
  if (p.is_zero() && q.is_zero()) return {};
  BivarPoly result;
  if (p.is_zero() || q.is_zero()) {
    result = p.is_zero() ? q : p;
  } else {
    XPoly a = to_xpoly(p);
    XPoly b = to_xpoly(q);
    const UniPoly ca = content(a);
    const UniPoly cb = content(b);
    const UniPoly cg = gcd(ca, cb);
    XPoly pa = divide_coeffs(a, ca);
    XPoly pb = divide_coeffs(b, cb);
    XPoly pg;
    if (xdeg(pa) == 0 || xdeg(pb) == 0) {
      pg = {UniPoly::constant(Rational(1))};
    } else {
      pg = primitive_gcd(std::move(pa), std::move(pb));
    }
    for (auto& c : pg) c = c * cg;
    result = from_xpoly(pg);
  }
  return result * (Rational(1) / result.leading_term().second);
}

}  // namespace fgv
