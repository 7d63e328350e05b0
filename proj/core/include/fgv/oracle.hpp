#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fgv/abelian.hpp"
#include "fgv/exterior.hpp"

namespace fgv {

struct HolonomyConfig {
  unsigned step_count = 20000;  ///< RK4 steps per revolution, >= 100
  double refine_tol = 1e-12;    ///< accepted |delta(n) - delta(2n)|

  /// Throws std::invalid_argument on out-of-range fields.
  void validate() const;
};

struct DisplacementSample {
  double t = 0;
  double eps = 0;
  double delta = 0;
  double est_error = 0;  ///< |delta at step_count - delta at 2 step_count|
};

/// A 1-form P dx + Q dy with rational-function coefficients, compiled to
/// doubles for fast evaluation. Polynomial forms have denominator 1.
class NumericForm {
 public:
  explicit NumericForm(const PolyForm1& w);
  explicit NumericForm(const RatForm1& w);

  /// P and Q at (x, y). Throws DenominatorVanished at a pole.
  void evaluate(long double x, long double y, long double& p, long double& q) const;
  bool is_zero() const noexcept { return zero_; }

 private:
  struct Poly {
    std::vector<long double> coeff;
    std::vector<unsigned> ex, ey;
    unsigned max_x = 0, max_y = 0;
  };
  static Poly compile(const BivarPoly& p);
  long double eval(const Poly& p, const long double* xp, const long double* yp) const;

  Poly pn_, pd_, qn_, qd_;
  unsigned max_x_ = 0, max_y_ = 0;
  bool zero_ = false;
};

/// F at the first return to the transversal {y = 0, x > 0} of the leaf of
/// dF + eps w through (sqrt t, 0), followed counterclockwise. The leaf is
/// written as rho(theta) and integrated with fixed-step RK4 in
/// v = log(rho^2 / t).
///
/// Throws LeafEscapedAnnulus when F leaves (t/2, 2t) and DenominatorVanished
/// when the leaf stops being a graph over theta.
double holonomy_return(const OvalFamily& family, const NumericForm& w, double t, double eps,
                       const HolonomyConfig& cfg = {});

/// Delta(t, eps) = return - t, computed from v directly so that small
/// displacements keep their relative precision.
double displacement(const OvalFamily& family, const NumericForm& w, double t, double eps, unsigned steps);

/// Delta with a step-halved validation run.
DisplacementSample displacement_sample(const OvalFamily& family, const NumericForm& w, double t, double eps,
                                       const HolonomyConfig& cfg = {});

/// All (t, eps) pairs, t-major, evaluated concurrently. Output order matches
/// the input grid regardless of scheduling.
std::vector<DisplacementSample> displacement_sweep(const OvalFamily& family, const NumericForm& w,
                                                   const std::vector<double>& ts, const std::vector<double>& eps,
                                                   const HolonomyConfig& cfg = {});

struct MelnikovEstimate {
  std::vector<double> coefficients;  ///< estimates of M_1(t)..M_m(t)
  std::vector<double> eps_grid;
  std::vector<double> residuals;     ///< per grid point, after the fit
  double residual_norm = 0;
  double condition_number = 0;       ///< of the column-scaled design matrix
  bool ill_conditioned = false;
};

/// Samples Delta on eps_j = eps0 * 2^-j, j = 0..2m, and fits
/// sum_{i=1..2m} c_i eps^i by least squares. The extra m coefficients absorb
/// the tail of the jet; only c_1..c_m are reported.
MelnikovEstimate melnikov_estimate(const OvalFamily& family, const NumericForm& w, double t, unsigned m,
                                   const HolonomyConfig& cfg = {}, double eps0 = 1e-3);

inline constexpr double kIllConditioned = 1e10;

struct DarbouxCheck {
  std::vector<DisplacementSample> samples;
  double max_abs_delta = 0;
  double threshold = 1e-8;
  bool passed = false;
};

/// The integrable rational perturbation w = F dr / r, r = 1 + x, sampled at
/// t in {0.25, 0.5}, eps in {1e-2, 1e-3}.
DarbouxCheck darboux_fixture_check(const HolonomyConfig& cfg = {});

/// The Darboux perturbation as a rational form.
RatForm1 darboux_form();

/// Header "t,eps,delta,est_error" and one row per sample, full precision.
void write_csv(std::ostream& out, const std::vector<DisplacementSample>& samples);

}  // namespace fgv
