#include "fgv/francoise.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fgv/linsolve.hpp"

namespace fgv {
namespace {

/// Monomials of total degree d in descending graded-lex order.
std::vector<Monomial> monomials_desc(int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  const auto deg = static_cast<unsigned>(d);
  for (unsigned a = deg + 1; a-- > 0;) out.push_back({a, deg - a});
  return out;
}

BivarPoly homogeneous_part(const BivarPoly& p, unsigned degree) {
  BivarPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() == degree) out.add_term(c, m.x, m.y);
  }
  return out;
}

struct BlockSolution {
  bool consistent = false;
  BivarPoly g;
  BivarPoly r;
};

/// Solves P = g F_x + r_x, Q = g F_y + r_y for homogeneous P, Q of degree e
/// (F homogeneous quadratic, so F_x, F_y are linear).
BlockSolution solve_block(const BivarPoly& P, const BivarPoly& Q, unsigned e, const PolyForm1& dF) {
  const auto g_monos = monomials_desc(static_cast<int>(e) - 1);
  const auto r_monos = monomials_desc(static_cast<int>(e) + 1);
  const auto eq_monos = monomials_desc(static_cast<int>(e));
  const std::size_t ng = g_monos.size();
  const std::size_t cols = ng + r_monos.size();
  const std::size_t rows = 2 * eq_monos.size();

  std::map<Monomial, std::size_t, GradedLex> row_of;
  for (std::size_t i = 0; i < eq_monos.size(); ++i) row_of[eq_monos[i]] = i;

  RationalMatrix A(rows, cols);
  std::vector<Rational> b(rows);
  for (std::size_t i = 0; i < eq_monos.size(); ++i) {
    b[i] = P.coeff(eq_monos[i].x, eq_monos[i].y);
    b[eq_monos.size() + i] = Q.coeff(eq_monos[i].x, eq_monos[i].y);
  }
  auto place = [&](std::size_t offset, const BivarPoly& column_poly, std::size_t col) {
    for (const auto& [m, c] : column_poly.terms()) {
      auto it = row_of.find(m);
      if (it == row_of.end()) throw InternalConsistencyError("decomposition column leaves its degree block");
      A(offset + it->second, col) += c;
    }
  };
  for (std::size_t j = 0; j < ng; ++j) {
    const BivarPoly mono = BivarPoly::monomial(Rational(1), g_monos[j].x, g_monos[j].y);
    place(0, mono * dF.p, j);
    place(eq_monos.size(), mono * dF.q, j);
  }
  for (std::size_t j = 0; j < r_monos.size(); ++j) {
    const BivarPoly mono = BivarPoly::monomial(Rational(1), r_monos[j].x, r_monos[j].y);
    place(0, partial_x(mono), ng + j);
    place(eq_monos.size(), partial_y(mono), ng + j);
  }

  const LinearSolution sol = solve_fraction_free(A, b);
  BlockSolution out;
  out.consistent = sol.consistent;
  if (!sol.consistent) return out;
  for (std::size_t j = 0; j < ng; ++j) out.g.add_term(sol.values[j], g_monos[j].x, g_monos[j].y);
  for (std::size_t j = 0; j < r_monos.size(); ++j) {
    out.r.add_term(sol.values[ng + j], r_monos[j].x, r_monos[j].y);
  }
  return out;
}

}  // namespace

FrancoisePair FrancoisePair::verified(BivarPoly g, BivarPoly r, const PolyForm1& source, const OvalFamily& family) {
  if (r.constant_term() != 0) throw InternalConsistencyError("Francoise r must have zero constant term");
  const PolyForm1 rebuilt = g * family.dF() + differential(r);
  if (!(rebuilt == source)) {
    throw InternalConsistencyError("Francoise pair does not satisfy source = g dF + dr");
  }
  return FrancoisePair(std::move(g), std::move(r));
}

Decomposition decompose(const PolyForm1& w, const OvalFamily& family) {
  const PolyForm1 dF = family.dF();
  const int deg = std::max(w.p.total_degree(), w.q.total_degree());
  BivarPoly g;
  BivarPoly r;
  bool consistent = true;
  for (int e = 0; e <= deg; ++e) {
    const auto ue = static_cast<unsigned>(e);
    const BivarPoly P = homogeneous_part(w.p, ue);
    const BivarPoly Q = homogeneous_part(w.q, ue);
    if (P.is_zero() && Q.is_zero()) continue;
    BlockSolution block = solve_block(P, Q, ue, dF);
    if (!block.consistent) {
      consistent = false;
      break;
    }
    g += block.g;
    r += block.r;
  }

  const PeriodPoly period = period_of_form(w, family);
  if (!consistent) {
    if (period.is_zero()) {
      throw InternalConsistencyError("decomposition failed although the period vanishes (degree bound violated)");
    }
    return NoSolution{period};
  }
  if (!period.is_zero()) throw InternalConsistencyError("decomposed a form with nonzero period");
  return FrancoisePair::verified(std::move(g), std::move(r), w, family);
}

MelnikovResult melnikov_sequence(const OvalFamily& family, const PolyForm1& w, unsigned max_order) {
  if (max_order < 1) throw std::invalid_argument("max_order must be at least 1");
  MelnikovResult result;
  std::vector<FrancoisePair> pairs;
  BivarPoly g_prev(Rational(1));
  bool obstructed = false;
  for (unsigned k = 1; k <= max_order; ++k) {
    const PolyForm1 form = g_prev * w;
    PeriodPoly m = period_of_form(form, family);
    if (k % 2 == 1) m = -m;
    result.melnikov.push_back(m);
    if (!m.is_zero()) {
      result.first_nonzero = k;
      obstructed = true;
      break;
    }
    auto dec = decompose(form, family);
    auto* pair = std::get_if<FrancoisePair>(&dec);
    if (pair == nullptr) throw InternalConsistencyError("zero Melnikov function but no decomposition");
    g_prev = pair->g();
    pairs.push_back(std::move(*pair));
  }
  result.sequence = FrancoiseSequence(std::move(pairs), obstructed);
  return result;
}

SequenceLength sequence_length(const FrancoiseSequence& seq, unsigned max_order) {
  const std::size_t limit = std::min<std::size_t>(seq.size(), max_order);
  for (std::size_t i = 1; i <= limit; ++i) {
    if (seq.pair(i).g().is_zero()) return {SequenceLength::Kind::finite, static_cast<unsigned>(i - 1)};
  }
  if (seq.obstructed() && seq.size() < max_order) return {SequenceLength::Kind::obstructed, 0};
  return {SequenceLength::Kind::exceeds_max, 0};
}

bool gelfand_leray_holds(const FrancoiseSequence& seq, const PolyForm1& w, const OvalFamily& family) {
  const PolyForm1 dF = family.dF();
  for (std::size_t i = 1; i <= seq.size(); ++i) {
    const PolyForm2 lhs = d_planar(seq.g(i - 1) * w);
    const PolyForm2 rhs = wedge(differential(seq.g(i)), dF);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace fgv
