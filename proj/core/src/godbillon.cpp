#include "fgv/godbillon.hpp"

#include <map>
#include <string>

#include "fgv/linsolve.hpp"

namespace fgv {
namespace {

constexpr unsigned kVolume = kDx | kDy | kDeps;

Rational sign(unsigned i) { return (i % 2) ? Rational(-1) : Rational(1); }

/// p with p * dF == w, if any.
std::optional<BivarPoly> divide_by_dF(const PolyForm1& w, const PolyForm1& dF) {
  if (w.is_zero()) return BivarPoly();
  std::optional<BivarPoly> q;
  if (!dF.p.is_zero()) {
    q = divide_exact(w.p, dF.p);
  } else if (!dF.q.is_zero()) {
    q = divide_exact(w.q, dF.q);
  }
  if (q && *q * dF == w) return q;
  return std::nullopt;
}

/// Solves dF ^ dR = s dx^dy (that is F_x R_y - F_y R_x = s) for R without
/// constant term, degree block by degree block.
std::optional<BivarPoly> solve_bracket(const BivarPoly& s, const PolyForm1& dF) {
  std::map<unsigned, BivarPoly> blocks;
  for (const auto& [m, c] : s.terms()) blocks[m.degree()].add_term(c, m.x, m.y);
  BivarPoly R;
  for (const auto& [e, rhs] : blocks) {
    if (e == 0) return std::nullopt;
    std::vector<Monomial> monos;
    for (unsigned a = e + 1; a-- > 0;) monos.push_back({a, e - a});
    std::map<Monomial, std::size_t, GradedLex> row_of;
    for (std::size_t i = 0; i < monos.size(); ++i) row_of[monos[i]] = i;
    RationalMatrix A(monos.size(), monos.size());
    std::vector<Rational> b(monos.size());
    for (std::size_t i = 0; i < monos.size(); ++i) b[i] = rhs.coeff(monos[i].x, monos[i].y);
    for (std::size_t j = 0; j < monos.size(); ++j) {
      const BivarPoly mono = BivarPoly::monomial(Rational(1), monos[j].x, monos[j].y);
      const BivarPoly image = wedge(dF, differential(mono)).h;
      for (const auto& [m, c] : image.terms()) {
        auto it = row_of.find(m);
        if (it == row_of.end()) throw InternalConsistencyError("bracket leaves its degree block");
        A(it->second, j) += c;
      }
    }
    const LinearSolution sol = solve_fraction_free(A, b);
    if (!sol.consistent) return std::nullopt;
    for (std::size_t j = 0; j < monos.size(); ++j) R.add_term(sol.values[j], monos[j].x, monos[j].y);
  }
  return R;
}

}  // namespace

std::vector<GVPair> gv_pairs_from_francoise(const FrancoiseSequence& seq) {
  std::vector<GVPair> out;
  out.reserve(seq.size());
  for (unsigned i = 1; i <= seq.size(); ++i) {
    const auto& pr = seq.pair(i);
    out.push_back({sign(i) * pr.g(), sign(i + 1) * Rational(i) * pr.r()});
  }
  return out;
}

PolyFormEps assemble_omega(const OvalFamily& family, const PolyForm1& w, const std::vector<GVPair>& pairs, unsigned k) {
  if (pairs.size() < k + 1) {
    throw InsufficientPairs("Omega of order " + std::to_string(k) + " needs " + std::to_string(k + 1) +
                           " Godbillon-Vey pairs, got " + std::to_string(pairs.size()));
  }
  const unsigned order = k + 1;
  const PolyForm1 dF = family.dF();

  EpsSeries<BivarPoly> G(order);
  G[0] = BivarPoly(Rational(1));
  for (unsigned i = 1; i <= order; ++i) G[i] = pairs[i - 1].G;

  PolyFormEps eta(order);
  {
    EpsSeries<BivarPoly> px(order), py(order);
    px[0] = dF.p;
    py[0] = dF.q;
    px[1] = w.p;
    py[1] = w.q;
    eta.set(kDx, px);
    eta.set(kDy, py);
  }

  EpsSeries<BivarPoly> R(order);
  for (unsigned i = 0; i <= k; ++i) R[i] = pairs[i].R;
  PolyFormEps rdeps(order);
  rdeps.set(kDeps, R);

  return rdeps + G * eta;
}

PolyFormEps integrability_defect(const PolyFormEps& omega, unsigned k) {
  if (omega.order() < k + 1) {
    throw OrderMismatch("defect through weight " + std::to_string(k + 1) + " needs a form of order >= " +
                        std::to_string(k + 1));
  }
  const PolyFormEps full = wedge(omega, d_total(omega));
  return truncate_weight(full, WeightBound{k + 1}).with_order(k + 1);
}

FirstIntegral first_integral(const OvalFamily& family, const FrancoiseSequence& seq, unsigned k) {
  if (seq.size() < k) {
    throw InsufficientPairs("first integral of order " + std::to_string(k) + " needs " + std::to_string(k) +
                           " Francoise pairs, got " + std::to_string(seq.size()));
  }
  EpsSeries<BivarPoly> s(k);
  s[0] = family.hamiltonian();
  for (unsigned i = 1; i <= k; ++i) s[i] = sign(i + 1) * seq.pair(i).r();
  return {s};
}

PolyFormEps total_differential(const FirstIntegral& fint, unsigned k) {
  if (fint.series.order() < k) throw InsufficientPairs("first integral is shorter than the requested order");
  return d_total(PolyFormEps::scalar(fint.series.with_order(k)));
}

EpsSeries<BivarPoly> integrating_factor(const PolyFormEps& omega, const FirstIntegral& fint, unsigned k) {
  if (omega.order() < k) throw OrderMismatch("Omega is known below the requested weight");
  const PolyFormEps target = truncate_weight(omega.with_order(k), WeightBound{k});
  const PolyFormEps dF_eps = total_differential(fint, k);
  const PolyForm1 dF = dF_eps.planar_part(0);

  if (!(target.planar_part(0) == dF) || !target[0].is_zero()) {
    throw NoFactorExists("weight-0 part of Omega is not dF");
  }

  EpsSeries<BivarPoly> N = EpsSeries<BivarPoly>::one(k);
  for (unsigned wgt = 1; wgt <= k; ++wgt) {
    const PolyFormEps residual = target - N * dF_eps;
    // n_wgt multiplies only dF inside the weight-wgt part; the deps part of
    // that weight is already fixed by lower n.
    if (!residual[kDeps][wgt - 1].is_zero()) {
      throw NoFactorExists("deps-coefficient mismatch at weight " + std::to_string(wgt));
    }
    auto n = divide_by_dF(residual.planar_part(wgt), dF);
    if (!n) throw NoFactorExists("weight-" + std::to_string(wgt) + " residual is not a multiple of dF");
    N[wgt] = std::move(*n);
  }
  if (!is_zero_mod_weight(target - N * dF_eps, WeightBound{k})) {
    throw NoFactorExists("Omega != N d~F_eps after solving");
  }
  return N;
}

FrancoiseSequence francoise_from_first_integral(const OvalFamily& family, const PolyForm1& w,
                                                const FirstIntegral& fint, unsigned k) {
  const PolyFormEps D = total_differential(fint, k);
  const PolyForm1 dF = family.dF();
  if (!(D.planar_part(0) == dF)) throw NoFactorExists("eps^0 part of d~F_eps is not dF");

  std::vector<FrancoisePair> pairs;
  BivarPoly G_prev(Rational(1));
  for (unsigned i = 1; i <= k; ++i) {
    const PolyForm1 rest = D.planar_part(i) - G_prev * w;
    auto G_i = divide_by_dF(rest, dF);
    if (!G_i) throw NoFactorExists("d~F_eps is not of the form R~ deps + G~ (dF + eps w) at eps^" + std::to_string(i));
    const BivarPoly& R_i = D[kDeps][i - 1];
    BivarPoly g = sign(i) * *G_i;
    BivarPoly r = sign(i + 1) * (Rational(1, i) * R_i);
    const BivarPoly g_prev = sign(i - 1) * G_prev;
    pairs.push_back(FrancoisePair::verified(g, std::move(r), g_prev * w, family));
    G_prev = std::move(*G_i);
  }
  return FrancoiseSequence(std::move(pairs), false);
}

GVClassicalSequence classical_gv_forms(const FirstIntegral& fint, unsigned m) {
  if (fint.series.order() < m + 1) {
    throw InsufficientPairs("classical forms through eta_" + std::to_string(m) + " need F_eps through eps^" +
                           std::to_string(m + 1));
  }
  const EpsSeries<BivarPoly> deps_F = fint.series.derivative().with_order(m);
  if (deps_F[0].is_zero()) throw DegenerateNormalization("r_1 = 0: d/deps F_eps is not invertible");
  const EpsSeries<RationalFunction> inv = invert(lift(deps_F));

  EpsSeries<RationalFunction> px(m), py(m);
  for (unsigned i = 0; i <= m; ++i) {
    px[i] = RationalFunction(partial_x(fint.series[i]));
    py[i] = RationalFunction(partial_y(fint.series[i]));
  }
  const EpsSeries<RationalFunction> ex = inv * px;
  const EpsSeries<RationalFunction> ey = inv * py;

  GVClassicalSequence out;
  for (unsigned i = 0; i <= m; ++i) {
    const RationalFunction f{Rational(factorial(i))};
    out.eta.push_back({f * ex[i], f * ey[i]});
  }

  const RationalFunction r1(deps_F[0]);
  const RatForm1 dr1 = lift(differential(deps_F[0]));
  for (unsigned i = 0; i <= m; ++i) {
    if (i == 0) {
      out.eta_of_dF.push_back(r1 * out.eta[0]);
    } else if (i == 1) {
      const RationalFunction inv_r1 = RationalFunction(Rational(1)) / r1;
      out.eta_of_dF.push_back(out.eta[1] - inv_r1 * dr1);
    } else {
      RationalFunction scale(Rational(1));
      for (unsigned j = 1; j < i; ++j) scale = scale / r1;
      out.eta_of_dF.push_back(scale * out.eta[i]);
    }
  }
  return out;
}

RatForm2 gv_relation_residual(const std::vector<RatForm1>& seq, unsigned n) {
  if (seq.size() < n + 2) throw InsufficientPairs("relation n needs n + 2 forms");
  RatForm2 res = d_planar(seq[n]);
  Integer binom = 1;
  for (unsigned j = 0; j <= n; ++j) {
    if (j > 0) binom = binom * (n - j + 1) / j;
    const RatForm2 term = wedge(seq[j], seq[n + 1 - j]);
    res = res - RationalFunction(Rational(binom)) * term;
  }
  return res;
}

LengthTwoWitness length_two_witness(const OvalFamily& family, const PolyForm1& w, const FrancoiseSequence& seq,
                                    unsigned k) {
  if (seq.size() < k) throw InsufficientPairs("witness of order " + std::to_string(k) + " needs " + std::to_string(k) + " pairs");
  const PolyForm1 dF = family.dF();

  LengthTwoWitness out{EpsSeries<BivarPoly>(k), {}};
  for (unsigned i = 0; i <= k; ++i) out.G[i] = sign(i) * seq.g(i);
  const EpsSeries<BivarPoly> Ginv = invert(out.G);
  if (!(out.G[0] == BivarPoly(Rational(1)))) throw InternalConsistencyError("G_0 must be 1");

  std::vector<PolyForm1> dG(k + 1);
  for (unsigned i = 0; i <= k; ++i) dG[i] = differential(out.G[i]);
  std::vector<PolyForm1> eta(k + 1, PolyForm1{});
  eta[0] = dF;
  if (k >= 1) eta[1] = w;
  std::vector<PolyForm2> d_eta(k + 1, PolyForm2{});
  if (k >= 1) d_eta[1] = d_planar(w);

  out.theta.assign(k + 1, PolyForm1{});
  for (unsigned n = 0; n <= k; ++n) {
    for (unsigned i = 0; i <= n; ++i) out.theta[n] = out.theta[n] - Ginv[i] * dG[n - i];
  }

  out.theta_closed = true;
  for (const auto& t : out.theta) out.theta_closed = out.theta_closed && d_planar(t).is_zero();

  const FirstIntegral fint = first_integral(family, seq, k);
  out.log_derivative_relation = true;
  out.closed_product = true;
  out.integrates_to_first_integral = true;
  for (unsigned n = 0; n <= k; ++n) {
    PolyForm2 theta_eta{};
    PolyForm2 product{};
    PolyForm1 g_eta{};
    for (unsigned i = 0; i <= n; ++i) {
      theta_eta = theta_eta + wedge(out.theta[i], eta[n - i]);
      product = product + out.G[i] * d_eta[n - i] + wedge(dG[i], eta[n - i]);
      g_eta = g_eta + out.G[i] * eta[n - i];
    }
    out.log_derivative_relation = out.log_derivative_relation && (d_eta[n] == theta_eta);
    out.closed_product = out.closed_product && product.is_zero();
    out.integrates_to_first_integral = out.integrates_to_first_integral && (g_eta == differential(fint.series[n]));
  }
  return out;
}

GVSolveResult solve_gv_weightwise(const OvalFamily& family, const PolyForm1& w, unsigned k) {
  const PolyForm1 dF = family.dF();
  GVSolveResult out;
  for (unsigned j = 1; j <= k + 1; ++j) {
    std::vector<GVPair> trial = out.pairs;
    trial.push_back(GVPair{});
    const PolyFormEps defect = integrability_defect(assemble_omega(family, w, trial, j - 1), j - 1);
    if (!is_zero_mod_weight(defect, WeightBound{j - 1})) {
      throw InternalConsistencyError("defect reappeared below weight " + std::to_string(j));
    }
    const BivarPoly& c = defect[kVolume][j - 1];
    // defect = eps^(j-1) dF ^ deps ^ (E - dR_j) and dF ^ deps ^ dR = {F,R} dx^dy^deps
    auto R = solve_bracket(-c, dF);
    if (!R) {
      // dF ^ E = -c dx^dy, and on the circles E(gamma') = (dF ^ E) / 2
      const PeriodPoly period = Rational(-1, 2) * angular_integral(c, family);
      out.obstruction = Obstruction{j, period, Rational(-1, j) * period};
      return out;
    }
    trial.back().R = std::move(*R);
    const PolyFormEps check = integrability_defect(assemble_omega(family, w, trial, j - 1), j - 1);
    if (!check.is_zero()) throw InternalConsistencyError("weight-" + std::to_string(j) + " solve left a defect");
    out.pairs = std::move(trial);
  }
  return out;
}

}  // namespace fgv
