// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "commands.hpp"
#include "fgv/godbillon.hpp"
#include "fgv/oracle.hpp"
#include "fgv/parse.hpp"
#include "random_forms.hpp"

using namespace fgv;

namespace {

const OvalFamily fam = OvalFamily::circles();
BivarPoly P(const std::string& s) { return parse_polynomial(s); }
const PolyForm1 example1{P("y^2"), BivarPoly()};
const PolyForm1 example2{P("2x^2"), P("2x y")};

Rational factorial(unsigned n) {
  Rational f(1);
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// Each check returns an empty string on success or a short failure reason.
using Check = std::function<std::string()>;

std::string criterion1() {
  const auto mel = melnikov_sequence(fam, example1, 8);
  if (mel.sequence.size() != 8) return "expected 8 pairs";
  for (unsigned n = 1; n <= 8; ++n) {
    const Rational c = Rational(n % 2 ? -1 : 1) / factorial(n);
    if (mel.sequence.g(n) != BivarPoly::monomial(c, n, 0)) return "g_" + std::to_string(n) + " differs";
  }
  for (const auto& m : mel.melnikov)
    if (!m.is_zero()) return "nonzero Melnikov function";
  return {};
}

std::string criterion2() {
  // eps-coefficients of exp(eps x)(y^2 + 2x/eps - 2/eps^2), from the sympy oracle.
  const std::vector<std::string> frozen = {
      "x^2 + y^2",           "2/3x^3 + x y^2",       "1/4x^4 + 1/2x^2 y^2", "1/15x^5 + 1/6x^3 y^2",
      "1/72x^6 + 1/24x^4 y^2", "1/420x^7 + 1/120x^5 y^2", "1/2880x^8 + 1/720x^6 y^2",
  };
  const auto seq = melnikov_sequence(fam, example1, 6).sequence;
  const FirstIntegral fint = first_integral(fam, seq, 6);
  for (unsigned m = 0; m <= 6; ++m) {
    if (differential(fint.series[m]) != differential(P(frozen[m]))) return "eps^" + std::to_string(m) + " differs";
  }
  return {};
}

std::string criterion3() {
  for (const auto& w : {example1, example2}) {
    const auto seq = melnikov_sequence(fam, w, 7).sequence;
    if (seq.size() != 7) return "Francoise sequence too short";
    for (unsigned i = 1; i <= 7; ++i) {
      if (seq.g(i - 1) * w != seq.g(i) * fam.dF() + differential(seq.pair(i).r())) return "pair relation fails";
    }
    const auto pairs = gv_pairs_from_francoise(seq);
    for (unsigned k = 0; k <= 6; ++k) {
      const PolyFormEps om = assemble_omega(fam, w, pairs, k);
      if (!integrability_defect(om, k).is_zero()) return "nonzero defect at k = " + std::to_string(k);
      const FirstIntegral fint = first_integral(fam, seq, k);
      const auto N = integrating_factor(om, fint, k);
      if (N[0] != BivarPoly(Rational(1))) return "n0 != 1";
      if (!is_zero_mod_weight(om.with_order(k) - N * total_differential(fint, k), WeightBound{k}))
        return "Omega != N dF_eps";
      const auto back = francoise_from_first_integral(fam, w, fint, k);
      for (unsigned i = 1; i <= k; ++i)
        if (back.pair(i) != seq.pair(i)) return "read-back pair differs";
    }
  }
  return {};
}

std::string criterion4() {
  const PolyForm1 ydx{P("y"), BivarPoly()};
  const auto mel = melnikov_sequence(fam, ydx, 1);
  if (mel.melnikov[0] != PeriodPoly{UniPoly::monomial(Rational(1), 1)}) return "M1 != pi t";
  const auto gv = cli::cmd_gv(cli::spec_from_texts("x^2 + y^2", "y", "0"), 0);
  if (gv.exit_code != cli::kObstruction || gv.report["obstruction"]["kind"] != "ObstructionAtOrder" ||
      gv.report["obstruction"]["order"] != 1)
    return "gv did not report ObstructionAtOrder(1)";
  std::mt19937 rng(500);
  for (int i = 0; i < 500; ++i) {
    const PolyForm1 w = (i % 2) ? testing::random_form(rng, 6) : testing::random_relatively_exact(rng, 5, fam.dF());
    const bool solved = std::holds_alternative<FrancoisePair>(decompose(w, fam));
    if (solved != period_of_form(w, fam).is_zero()) return "equivalence fails on sample " + std::to_string(i);
  }
  return {};
}

std::string criterion5() {
  std::vector<PolyForm1> inputs;
  for (const char* name : {"example1", "example2", "nonzero-m1"}) {
    inputs.push_back(cli::load_spec(std::string(FGV_FIXTURES) + "/" + name + ".json").polynomial_omega());
  }
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) inputs.push_back(testing::random_relatively_exact(rng, 3, fam.dF()));
  for (const auto& w : inputs) {
    const auto seq = melnikov_sequence(fam, w, 4).sequence;
    for (unsigned i = 1; i <= seq.size(); ++i) {
      if (d_planar(seq.g(i - 1) * w) != wedge(differential(seq.g(i)), fam.dF())) return "identity fails";
    }
    if (!gelfand_leray_holds(seq, w, fam)) return "gelfand_leray_holds disagrees";
  }
  return {};
}

std::string criterion6() {
  const auto w2 = length_two_witness(fam, example2, melnikov_sequence(fam, example2, 6).sequence, 6);
  if (!w2.closed_product || !w2.integrates_to_first_integral) return "example2 witness fails";
  const auto w1 = length_two_witness(fam, example1, melnikov_sequence(fam, example1, 4).sequence, 4);
  if (!w1.closed_product) return "example1 d(G eta) != 0";
  return {};
}

std::string criterion7() {
  const auto seq = melnikov_sequence(fam, example1, 3).sequence;
  const auto gv = classical_gv_forms(first_integral(fam, seq, 3), 2);
  if (!gv_relation_residual(gv.eta, 0).is_zero()) return "d eta0 != eta0 ^ eta1";
  if (!gv_relation_residual(gv.eta, 1).is_zero()) return "d eta1 != eta0 ^ eta2";
  const RationalFunction r1(seq.pair(1).r());
  const RatForm1 dF = lift(fam.dF());
  if (gv.eta[0] != RatForm1{dF.p / r1, dF.q / r1}) return "eta0 != dF / r1";
  return {};
}

std::string criterion8() {
  const NumericForm ydx(PolyForm1{P("y"), BivarPoly()});
  const double m1 = melnikov_estimate(fam, ydx, 1.0, 1).coefficients.at(0);
  if (std::fabs(m1 - std::numbers::pi) > 1e-6 * std::numbers::pi) return "M1 estimate off";
  const double d1 = displacement_sample(fam, NumericForm(example1), 1.0, 1e-2).delta;
  if (std::fabs(d1) >= 1e-10) return "example1 displacement too large";
  const auto darboux = darboux_fixture_check();
  if (!darboux.passed || darboux.max_abs_delta >= 1e-8) return "Darboux displacement too large";
  // An integrable perturbation has zero displacement, so what remains is integrator error.
  const NumericForm e1(example1);
  const double e100 = std::fabs(displacement(fam, e1, 0.25, 0.3, 100));
  const double e200 = std::fabs(displacement(fam, e1, 0.25, 0.3, 200));
  if (e100 / e200 < 8) return "RK4 ratio " + std::to_string(e100 / e200);
  return {};
}

std::string criterion9() {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> coeff(-3, 3);
  int checked = 0;
  while (checked < 20) {
    PolyForm1 w;
    for (unsigned e = 0; e <= 4; ++e) {
      for (unsigned a = 0; a <= e; ++a) {
        w.p.add_term(Rational(coeff(rng), 4), a, e - a);
        w.q.add_term(Rational(coeff(rng), 4), a, e - a);
      }
    }
    const PeriodPoly m1 = melnikov_sequence(fam, w, 1).melnikov[0];
    // Relative error needs M1(1) != 0, not just M1 != 0 as a polynomial.
    if (m1.poly.evaluate(Rational(1)) == 0) continue;
    const double sym = m1.evaluate(1.0);
    const double num = melnikov_estimate(fam, NumericForm(w), 1.0, 1).coefficients.at(0);
    if (std::fabs(num - sym) > 1e-4 * std::fabs(sym)) return "form " + std::to_string(checked) + " disagrees";
    ++checked;
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Check>> criteria = {
      {"Example 1 Francoise pairs", criterion1},
      {"Example 1 first integral", criterion2},
      {"correspondence round trip", criterion3},
      {"obstruction detection", criterion4},
      {"Gelfand-Leray identity", criterion5},
      {"length-two witness", criterion6},
      {"classical GV relations", criterion7},
      {"numeric oracle", criterion8},
      {"symbolic-numeric cross-validation", criterion9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string why;
    try {
      why = criteria[i].second();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (why.empty()) {
      std::printf("PASS criterion %zu: %s\n", i + 1, criteria[i].first);
    } else {
      std::printf("FAIL criterion %zu: %s (%s)\n", i + 1, criteria[i].first, why.c_str());
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
