#include "fgv/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "fgv/errors.hpp"

namespace fgv {

void HolonomyConfig::validate() const {
  if (step_count < 100) throw std::invalid_argument("step_count must be >= 100");
  if (!(refine_tol > 0)) throw std::invalid_argument("refine_tol must be positive");
}

NumericForm::Poly NumericForm::compile(const BivarPoly& p) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    out.coeff.push_back(static_cast<long double>(c.get_d()));
    // get_d drops bits of wide rationals; recover them from num / den.
    const mpz_class& n = c.get_num();
    const mpz_class& d = c.get_den();
    if (n.fits_slong_p() && d.fits_slong_p()) {
      out.coeff.back() = static_cast<long double>(n.get_si()) / static_cast<long double>(d.get_si());
    }
    out.ex.push_back(m.x);
    out.ey.push_back(m.y);
    out.max_x = std::max(out.max_x, m.x);
    out.max_y = std::max(out.max_y, m.y);
  }
  return out;
}

NumericForm::NumericForm(const PolyForm1& w) : NumericForm(lift(w)) {}

NumericForm::NumericForm(const RatForm1& w)
    : pn_(compile(w.p.numerator())),
      pd_(compile(w.p.denominator())),
      qn_(compile(w.q.numerator())),
      qd_(compile(w.q.denominator())),
      zero_(w.is_zero()) {
  for (const Poly* p : {&pn_, &pd_, &qn_, &qd_}) {
    max_x_ = std::max(max_x_, p->max_x);
    max_y_ = std::max(max_y_, p->max_y);
  }
}

long double NumericForm::eval(const Poly& p, const long double* xp, const long double* yp) const {
  long double s = 0;
  for (std::size_t i = 0; i < p.coeff.size(); ++i) s += p.coeff[i] * xp[p.ex[i]] * yp[p.ey[i]];
  return s;
}

void NumericForm::evaluate(long double x, long double y, long double& p, long double& q) const {
  if (zero_) {
    p = q = 0;
    return;
  }
  // Small fixed buffers cover every realistic degree; fall back to the heap.
  constexpr unsigned kInline = 32;
  long double xs_buf[kInline], ys_buf[kInline];
  std::vector<long double> xs_heap, ys_heap;
  long double* xp = xs_buf;
  long double* yp = ys_buf;
  if (max_x_ >= kInline || max_y_ >= kInline) {
    xs_heap.resize(max_x_ + 1);
    ys_heap.resize(max_y_ + 1);
    xp = xs_heap.data();
    yp = ys_heap.data();
  }
  xp[0] = yp[0] = 1;
  for (unsigned i = 1; i <= max_x_; ++i) xp[i] = xp[i - 1] * x;
  for (unsigned i = 1; i <= max_y_; ++i) yp[i] = yp[i - 1] * y;

  const long double pd = eval(pd_, xp, yp);
  const long double qd = eval(qd_, xp, yp);
  if (pd == 0 || qd == 0) throw DenominatorVanished("form has a pole on the leaf");
  p = eval(pn_, xp, yp) / pd;
  q = eval(qn_, xp, yp) / qd;
}

namespace {

void require_circles(const OvalFamily& family) {
  if (!(family.hamiltonian() == OvalFamily::circles().hamiltonian())) {
    throw UnsupportedOvalFamily("the oracle integrates only F = x^2 + y^2");
  }
}

/// v = log(rho^2 / t) after one revolution.
long double log_return(const NumericForm& w, double t, double eps, unsigned steps) {
  if (!(t > 0)) throw std::invalid_argument("t must be positive");
  if (eps == 0 || w.is_zero()) return 0;
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  const long double h = two_pi / steps;
  const long double e = eps;
  const long double bound = std::numbers::ln2_v<long double>;

  auto rhs = [&](long double theta, long double v) {
    if (!(std::fabs(v) < bound)) {
      throw LeafEscapedAnnulus("leaf left t/2 < F < 2t at t = " + std::to_string(t) + ", eps = " + std::to_string(eps));
    }
    const long double rho = std::sqrt(t * std::exp(v));
    const long double c = std::cos(theta), s = std::sin(theta);
    long double P, Q;
    w.evaluate(rho * c, rho * s, P, Q);
    const long double den = 2 * rho + e * (P * c + Q * s);
    if (!(den > 0)) {
      throw DenominatorVanished("leaf is not a graph over theta at t = " + std::to_string(t) +
                                ", eps = " + std::to_string(eps));
    }
    return -2 * e * (Q * c - P * s) / den;
  };

  long double v = 0;
  for (unsigned i = 0; i < steps; ++i) {
    const long double th = h * i;
    const long double k1 = rhs(th, v);
    const long double k2 = rhs(th + h / 2, v + h / 2 * k1);
    const long double k3 = rhs(th + h / 2, v + h / 2 * k2);
    const long double k4 = rhs(th + h, v + h * k3);
    v += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  if (!(std::fabs(v) < bound)) throw LeafEscapedAnnulus("return point left t/2 < F < 2t");
  return v;
}

}  // namespace

double holonomy_return(const OvalFamily& family, const NumericForm& w, double t, double eps,
                       const HolonomyConfig& cfg) {
  cfg.validate();
  require_circles(family);
  return static_cast<double>(t * std::exp(log_return(w, t, eps, cfg.step_count)));
}

double displacement(const OvalFamily& family, const NumericForm& w, double t, double eps, unsigned steps) {
  require_circles(family);
  return static_cast<double>(t * std::expm1(log_return(w, t, eps, steps)));
}

DisplacementSample displacement_sample(const OvalFamily& family, const NumericForm& w, double t, double eps,
                                       const HolonomyConfig& cfg) {
  cfg.validate();
  const double coarse = displacement(family, w, t, eps, cfg.step_count);
  const double fine = displacement(family, w, t, eps, 2 * cfg.step_count);
  return {t, eps, fine, std::fabs(fine - coarse)};
}

std::vector<DisplacementSample> displacement_sweep(const OvalFamily& family, const NumericForm& w,
                                                   const std::vector<double>& ts, const std::vector<double>& eps,
                                                   const HolonomyConfig& cfg) {
  cfg.validate();
  std::vector<DisplacementSample> out(ts.size() * eps.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < out.size();) {
      out[i] = displacement_sample(family, w, ts[i / eps.size()], eps[i % eps.size()], cfg);
    }
  };
  const std::size_t n_workers =
      std::min<std::size_t>(out.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> jobs;
  for (std::size_t i = 0; i < n_workers; ++i) jobs.push_back(std::async(std::launch::async, worker));
  // get() rethrows the first integrator error; the other workers still finish.
  std::exception_ptr first_error;
  for (auto& j : jobs) {
    try {
      j.get();
    } catch (...) {
      if (!first_error) first_error = std::current_exception();
      next = out.size();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

MelnikovEstimate melnikov_estimate(const OvalFamily& family, const NumericForm& w, double t, unsigned m,
                                   const HolonomyConfig& cfg, double eps0) {
  if (m < 1) throw std::invalid_argument("melnikov_estimate needs m >= 1");
  cfg.validate();
  const unsigned n_points = 2 * m + 1;
  const unsigned n_coeffs = 2 * m;

  MelnikovEstimate out;
  for (unsigned j = 0; j < n_points; ++j) out.eps_grid.push_back(std::ldexp(eps0, -static_cast<int>(j)));
  const auto samples = displacement_sweep(family, w, {t}, out.eps_grid, cfg);

  // Columns scaled by eps0^i keep the matrix O(1).
  Eigen::MatrixXd A(n_points, n_coeffs);
  Eigen::VectorXd b(n_points);
  for (unsigned j = 0; j < n_points; ++j) {
    const double u = out.eps_grid[j] / eps0;
    double pw = 1;
    for (unsigned i = 0; i < n_coeffs; ++i) {
      pw *= u;
      A(j, i) = pw;
    }
    b(j) = samples[j].delta;
  }
  const Eigen::VectorXd x = A.colPivHouseholderQr().solve(b);
  const Eigen::VectorXd res = b - A * x;

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
  const auto& sv = svd.singularValues();
  out.condition_number = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : INFINITY;
  out.ill_conditioned = out.condition_number > kIllConditioned;
  out.residual_norm = res.norm();
  out.residuals.assign(res.data(), res.data() + res.size());
  for (unsigned i = 0; i < m; ++i) out.coefficients.push_back(x(i) / std::pow(eps0, i + 1));
  return out;
}

RatForm1 darboux_form() {
  const BivarPoly F = BivarPoly::x() * BivarPoly::x() + BivarPoly::y() * BivarPoly::y();
  const BivarPoly r = BivarPoly(Rational(1)) + BivarPoly::x();
  return {RationalFunction(F, r), RationalFunction()};
}

DarbouxCheck darboux_fixture_check(const HolonomyConfig& cfg) {
  DarbouxCheck out;
  out.samples = displacement_sweep(OvalFamily::circles(), NumericForm(darboux_form()), {0.25, 0.5}, {1e-2, 1e-3}, cfg);
  for (const auto& s : out.samples) out.max_abs_delta = std::max(out.max_abs_delta, std::fabs(s.delta));
  out.passed = out.max_abs_delta < out.threshold;
  return out;
}

void write_csv(std::ostream& out, const std::vector<DisplacementSample>& samples) {
  const auto flags = out.flags();
  const auto prec = out.precision();
  out << "t,eps,delta,est_error\n" << std::setprecision(17);
  for (const auto& s : samples) out << s.t << ',' << s.eps << ',' << s.delta << ',' << s.est_error << '\n';
  out.flags(flags);
  out.precision(prec);
}

}  // namespace fgv
