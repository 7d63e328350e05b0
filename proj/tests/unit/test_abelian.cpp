#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fgv/abelian.hpp"
#include "fgv/errors.hpp"
#include "fgv/parse.hpp"
#include "random_forms.hpp"

using namespace fgv;

namespace {
BivarPoly P(const char* s) { return parse_polynomial(s); }
const OvalFamily fam = OvalFamily::circles();
const double pi = std::numbers::pi;

/// Trapezoidal rule on the periodic integrand; exact up to rounding for
/// trigonometric polynomials of degree < n.
double quadrature(unsigned a, unsigned b, Differential basis, double t, unsigned n = 64) {
  const double rho = std::sqrt(t);
  double s = 0;
  for (unsigned i = 0; i < n; ++i) {
    const double th = 2 * pi * i / n;
    const double x = rho * std::cos(th), y = rho * std::sin(th);
    const double dx = -rho * std::sin(th), dy = rho * std::cos(th);
    s += std::pow(x, a) * std::pow(y, b) * (basis == Differential::dx ? dx : dy);
  }
  return s * 2 * pi / n;
}
}  // namespace

TEST_CASE("monomial periods") {
  CHECK(monomial_period(1, 0, Differential::dx).is_zero());
  CHECK(monomial_period(0, 1, Differential::dx) == PeriodPoly{UniPoly::monomial(Rational(-1), 1)});
  CHECK(monomial_period(2, 1, Differential::dx) == PeriodPoly{UniPoly::monomial(Rational(-1, 4), 2)});
  CHECK(monomial_period(1, 0, Differential::dy) == PeriodPoly{UniPoly::monomial(Rational(1), 1)});
  CHECK(monomial_period(0, 0, Differential::dx).is_zero());
}

TEST_CASE("angular means") {
  CHECK(angular_mean(0, 0) == 1);
  CHECK(angular_mean(2, 0) == Rational(1, 2));
  CHECK(angular_mean(2, 2) == Rational(1, 8));
  CHECK(angular_mean(4, 2) == Rational(1, 16));
  CHECK(angular_mean(1, 1) == 0);
}

TEST_CASE("monomial periods against quadrature") {
  for (unsigned a = 0; a <= 9; ++a) {
    for (unsigned b = 0; a + b <= 9; ++b) {
      for (auto basis : {Differential::dx, Differential::dy}) {
        CAPTURE(a);
        CAPTURE(b);
        const double exact = monomial_period(a, b, basis).evaluate(1.0);
        const double num = quadrature(a, b, basis, 1.0);
        if (exact == 0) {
          CHECK(std::fabs(num) < 1e-13);
        } else {
          CHECK(std::fabs(num - exact) <= 1e-10 * std::fabs(exact));
        }
        // Homogeneity in t.
        const double at2 = monomial_period(a, b, basis).evaluate(2.0);
        CHECK(std::fabs(at2 - quadrature(a, b, basis, 2.0)) <= 1e-10 * (1 + std::fabs(at2)));
      }
    }
  }
}

TEST_CASE("periods of forms") {
  CHECK(period_of_form({P("y^2"), BivarPoly()}, fam).is_zero());
  CHECK(period_of_form(differential(P("x^3 y^2")), fam).is_zero());
  CHECK(period_of_form({P("y"), BivarPoly()}, fam) == PeriodPoly{UniPoly::monomial(Rational(-1), 1)});
  CHECK(period_of_form({P("y + x^2 y"), BivarPoly()}, fam) ==
        PeriodPoly{UniPoly({Rational(0), Rational(-1), Rational(-1, 4)})});
}

TEST_CASE("exact and relatively exact forms have zero periods") {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    CHECK(period_of_form(differential(testing::random_poly(rng, 8)), fam).is_zero());
  }
  for (int i = 0; i < 50; ++i) {
    CHECK(period_of_form(testing::random_poly(rng, 5) * fam.dF(), fam).is_zero());
  }
}

TEST_CASE("period is linear") {
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    const PolyForm1 u = testing::random_form(rng, 5), v = testing::random_form(rng, 5);
    Rational alpha(static_cast<int>(rng() % 7) - 3, 2), beta(static_cast<int>(rng() % 5) + 1, 3);
    alpha.canonicalize();  // mpq_class(n, d) does not reduce
    beta.canonicalize();
    const PolyForm1 combo = BivarPoly(alpha) * u + BivarPoly(beta) * v;
    CHECK(period_of_form(combo, fam) == alpha * period_of_form(u, fam) + beta * period_of_form(v, fam));
  }
}

TEST_CASE("only the circle family is supported") {
  CHECK_NOTHROW(OvalFamily::from_hamiltonian(P("y^2 + x^2")));
  CHECK_THROWS_AS(OvalFamily::from_hamiltonian(P("x^2 + 2y^2")), UnsupportedOvalFamily);
  CHECK_THROWS_AS(OvalFamily::from_hamiltonian(P("x^2 + y^2 + x^3")), UnsupportedOvalFamily);
}

TEST_CASE("angular integral") {
  CHECK(angular_integral(BivarPoly(Rational(1)), fam) == PeriodPoly{UniPoly::constant(Rational(2))});
  CHECK(angular_integral(P("x^2"), fam) == PeriodPoly{UniPoly::monomial(Rational(1), 1)});
  CHECK(angular_integral(P("x y"), fam).is_zero());
}

TEST_CASE("period text") {
  CHECK(PeriodPoly{}.to_string() == "0");
  CHECK(PeriodPoly{UniPoly::monomial(Rational(1), 1)}.to_string() == "π·t");
  CHECK(PeriodPoly{UniPoly::monomial(Rational(-1, 4), 2)}.to_string() == "-π·1/4t^2");
  CHECK(PeriodPoly{UniPoly({Rational(0), Rational(1), Rational(1)})}.to_string() == "π·(t^2 + t)");
  CHECK(PeriodPoly{UniPoly::monomial(Rational(1), 1)}.evaluate(2.0) == doctest::Approx(2 * pi));
}
