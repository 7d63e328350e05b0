#pragma once

#include <optional>
#include <vector>

#include "fgv/francoise.hpp"

namespace fgv {

/// i-th Godbillon-Vey pair (G_i, R_i) of the deformation dF + eps w.
struct GVPair {
  BivarPoly G;
  BivarPoly R;
  friend bool operator==(const GVPair&, const GVPair&) = default;
};

/// G_i = (-1)^i g_i, R_i = (-1)^(i+1) i r_i for i = 1..m (entry i-1 holds
/// index i).
std::vector<GVPair> gv_pairs_from_francoise(const FrancoiseSequence& seq);

/// Omega = R deps + (dF + eps w) G with G = sum eps^i G_i (G_0 = 1) and
/// R = sum eps^i R_{i+1}, keeping every term of weight <= k + 1. The result
/// has order k + 1 and needs pairs 1..k+1; throws InsufficientPairs
/// otherwise.
PolyFormEps assemble_omega(const OvalFamily& family, const PolyForm1& w, const std::vector<GVPair>& pairs, unsigned k);

/// Omega ^ d~Omega truncated to weight <= k + 1 (order k + 1). Zero iff the
/// integrability condition holds through that weight. Throws OrderMismatch
/// when omega is known only below weight k + 1.
PolyFormEps integrability_defect(const PolyFormEps& omega, unsigned k);

/// F_eps = F + sum_{i=1..k} (-1)^(i+1) eps^i r_i.
struct FirstIntegral {
  EpsSeries<BivarPoly> series;
};

/// Throws InsufficientPairs when seq has fewer than k pairs.
FirstIntegral first_integral(const OvalFamily& family, const FrancoiseSequence& seq, unsigned k);

/// d~F_eps as a form of order k.
PolyFormEps total_differential(const FirstIntegral& fint, unsigned k);

/// Solves Omega = N d~F_eps through weight k for N = 1 + sum eps^i n_i,
/// one weight at a time, then re-verifies the identity exactly. Throws
/// NoFactorExists when a weight has no solution.
EpsSeries<BivarPoly> integrating_factor(const PolyFormEps& omega, const FirstIntegral& fint, unsigned k);

/// Reads G~ and R~ off d~F_eps = R~ deps + G~ (dF + eps w) and returns the
/// pairs g_i = (-1)^i G~_i, r_i = (-1)^(i+1) R~_i / i, i = 1..k, each
/// verified as a Francoise pair. Throws NoFactorExists if F_eps does not
/// have that shape.
FrancoiseSequence francoise_from_first_integral(const OvalFamily& family, const PolyForm1& w,
                                                const FirstIntegral& fint, unsigned k);

/// Classical Godbillon-Vey forms of the deformation: the eps-Taylor
/// coefficients of dF_eps / (d/deps F_eps) = sum eps^i / i! eta_i.
struct GVClassicalSequence {
  /// eta_0..eta_m: a Godbillon-Vey sequence of dF / r_1.
  std::vector<RatForm1> eta;
  /// The same sequence rescaled to start at dF: eta~_0 = dF,
  /// eta~_1 = eta_1 - dr_1 / r_1, eta~_i = r_1^(1-i) eta_i.
  std::vector<RatForm1> eta_of_dF;
};

/// Needs fint of order >= m + 1. Throws DegenerateNormalization when r_1 = 0.
GVClassicalSequence classical_gv_forms(const FirstIntegral& fint, unsigned m);

/// d w_n - sum_{j=0..n} C(n, j) w_j ^ w_{n+1-j}; zero for every n when the
/// sequence satisfies the Godbillon-Vey relations. Needs n + 2 forms.
RatForm2 gv_relation_residual(const std::vector<RatForm1>& seq, unsigned n);

/// theta = -dG/G for G = sum_{i<=k} (-1)^i eps^i g_i, with the identities it
/// is supposed to satisfy checked exactly through eps^k.
struct LengthTwoWitness {
  EpsSeries<BivarPoly> G;
  /// Planar 1-form coefficients theta_0..theta_k of the eps-expansion
  /// (polynomial, since G_0 = 1).
  std::vector<PolyForm1> theta;
  bool theta_closed = false;           ///< d theta = 0
  bool log_derivative_relation = false;  ///< d eta = theta ^ eta
  bool closed_product = false;         ///< G d eta + dG ^ eta = 0, i.e. d(G eta) = 0
  bool integrates_to_first_integral = false;  ///< G eta = dF_eps
};

LengthTwoWitness length_two_witness(const OvalFamily& family, const PolyForm1& w, const FrancoiseSequence& seq,
                                    unsigned k);

/// Nonzero Melnikov function met by the weight-by-weight solver.
struct Obstruction {
  unsigned order = 0;          ///< mu
  PeriodPoly defect_period;    ///< period of the unsolvable weight-mu defect
  PeriodPoly melnikov;         ///< M_mu = -defect_period / mu
};

struct GVSolveResult {
  std::vector<GVPair> pairs;  ///< pairs 1..k+1 when unobstructed
  std::optional<Obstruction> obstruction;
};

/// Solves Omega ^ d~Omega = 0 through weight k + 1 directly, one weight at a
/// time, without using Francoise pairs: keeps G = 1 and at weight j picks
/// R_j from the linear equation {F, R_j} = -(weight-j defect). When that
/// equation has no polynomial solution the defect's period is reported.
GVSolveResult solve_gv_weightwise(const OvalFamily& family, const PolyForm1& w, unsigned k);

}  // namespace fgv
