#include <doctest.h>

#include <random>

#include "fgv/errors.hpp"
#include "fgv/francoise.hpp"
#include "fgv/parse.hpp"
#include "random_forms.hpp"

using namespace fgv;

namespace {
BivarPoly P(const char* s) { return parse_polynomial(s); }
const OvalFamily fam = OvalFamily::circles();
const BivarPoly ONE{Rational(1)};
const PolyForm1 example1{P("y^2"), BivarPoly()};
const PolyForm1 example2{P("2x^2"), P("2x y")};  // x dF

void check_resubstitution(const FrancoiseSequence& seq, const PolyForm1& w) {
  for (std::size_t i = 1; i <= seq.size(); ++i) {
    const auto& pr = seq.pair(i);
    CHECK((seq.g(i - 1) * w - pr.g() * fam.dF() - differential(pr.r())).is_zero());
    CHECK(pr.r().constant_term() == 0);
  }
}
}  // namespace

TEST_CASE("decompose examples") {
  SUBCASE("y^2 dx") {
    const auto dec = decompose(example1, fam);
    const auto* pr = std::get_if<FrancoisePair>(&dec);
    REQUIRE(pr);
    CHECK(pr->g() == P("-x"));
    CHECK(pr->r() == P("x y^2 + 2/3x^3"));
  }
  SUBCASE("exact form") {
    const auto dec = decompose(differential(P("x^3")), fam);
    const auto* pr = std::get_if<FrancoisePair>(&dec);
    REQUIRE(pr);
    CHECK(pr->g().is_zero());
    CHECK(pr->r() == P("x^3"));
  }
  SUBCASE("y dx has a period") {
    const auto dec = decompose({P("y"), BivarPoly()}, fam);
    const auto* ns = std::get_if<NoSolution>(&dec);
    REQUIRE(ns);
    CHECK(ns->witness == PeriodPoly{UniPoly::monomial(Rational(-1), 1)});
  }
  SUBCASE("zero form") {
    const auto dec = decompose(PolyForm1{}, fam);
    const auto* pr = std::get_if<FrancoisePair>(&dec);
    REQUIRE(pr);
    CHECK(pr->g().is_zero());
    CHECK(pr->r().is_zero());
  }
  SUBCASE("constant terms of r are dropped") {
    const auto dec = decompose(differential(P("x y + 5")), fam);
    CHECK(std::get<FrancoisePair>(dec).r() == P("x y"));
  }
}

TEST_CASE("verified pairs reject wrong data") {
  CHECK_THROWS_AS(FrancoisePair::verified(P("x"), P("x y^2"), example1, fam), InternalConsistencyError);
  CHECK_THROWS_AS(FrancoisePair::verified(BivarPoly(), P("x + 1"), {ONE, BivarPoly()}, fam), InternalConsistencyError);
  CHECK_NOTHROW(FrancoisePair::verified(BivarPoly(), P("x"), {ONE, BivarPoly()}, fam));
}

TEST_CASE("Melnikov sequence for y dx") {
  const auto res = melnikov_sequence(fam, {P("y"), BivarPoly()}, 5);
  REQUIRE(res.first_nonzero);
  CHECK(*res.first_nonzero == 1);
  CHECK(res.melnikov.size() == 1);
  CHECK(res.melnikov[0].to_string() == "π·t");
  CHECK(res.sequence.empty());
  CHECK(res.sequence.obstructed());
  CHECK(sequence_length(res.sequence, 5).kind == SequenceLength::Kind::obstructed);
}

TEST_CASE("Example 1: g_n = (-1)^n x^n / n!") {
  const auto res = melnikov_sequence(fam, example1, 8);
  CHECK_FALSE(res.first_nonzero);
  REQUIRE(res.sequence.size() == 8);
  for (unsigned n = 1; n <= 8; ++n) {
    CHECK(res.melnikov[n - 1].is_zero());
    const Rational c = Rational((n % 2) ? -1 : 1) / factorial(n);
    CHECK(res.sequence.pair(n).g() == BivarPoly::monomial(c, n, 0));
    // r_n = (-1)^(n+1) (x^n y^2 / n! + 2(n+1) x^(n+2) / (n+2)!)
    const Rational s((n % 2) ? 1 : -1);
    const BivarPoly r = BivarPoly::monomial(s / factorial(n), n, 2) +
                        BivarPoly::monomial(s * 2 * (n + 1) / factorial(n + 2), n + 2, 0);
    CHECK(res.sequence.pair(n).r() == r);
  }
  check_resubstitution(res.sequence, example1);
  CHECK(sequence_length(res.sequence, 8).kind == SequenceLength::Kind::exceeds_max);
}

TEST_CASE("Example 2: g_i = x^i, r_i = 0") {
  const auto res = melnikov_sequence(fam, example2, 6);
  CHECK_FALSE(res.first_nonzero);
  REQUIRE(res.sequence.size() == 6);
  for (unsigned i = 1; i <= 6; ++i) {
    CHECK(res.sequence.pair(i).g() == BivarPoly::monomial(Rational(1), i, 0));
    CHECK(res.sequence.pair(i).r().is_zero());
  }
  CHECK(sequence_length(res.sequence, 6).kind == SequenceLength::Kind::exceeds_max);
}

TEST_CASE("sequence length") {
  const auto exact = melnikov_sequence(fam, differential(P("x^2 y")), 4);
  CHECK(sequence_length(exact.sequence, 4) == SequenceLength{SequenceLength::Kind::finite, 0});
  const auto zero = melnikov_sequence(fam, PolyForm1{}, 3);
  CHECK(sequence_length(zero.sequence, 3) == SequenceLength{SequenceLength::Kind::finite, 0});
  // g_1 = 1 and g_1 w = w: the sequence never ends.
  const auto dF = melnikov_sequence(fam, fam.dF(), 3);
  CHECK(dF.sequence.pair(1).g() == ONE);
  CHECK(sequence_length(dF.sequence, 3).kind == SequenceLength::Kind::exceeds_max);
  // w = x dF - d(2x y^2): g_1 = x and x w = d(x^4/2 - x^2 y^2).
  const PolyForm1 w{P("2x^2 - 2y^2"), P("-2x y")};
  const auto one = melnikov_sequence(fam, w, 4);
  CHECK(one.sequence.pair(1).g() == P("x"));
  CHECK(one.sequence.pair(2).g().is_zero());
  CHECK(sequence_length(one.sequence, 4) == SequenceLength{SequenceLength::Kind::finite, 1});
}

TEST_CASE("max_order must be positive") {
  CHECK_THROWS_AS(melnikov_sequence(fam, example1, 0), std::invalid_argument);
}

TEST_CASE("decompose succeeds exactly when the period vanishes") {
  std::mt19937 rng(99);
  int solved = 0, blocked = 0;
  for (int i = 0; i < 100; ++i) {
    const PolyForm1 w = (i % 2) ? testing::random_form(rng, 6) : testing::random_relatively_exact(rng, 5, fam.dF());
    const bool zero_period = period_of_form(w, fam).is_zero();
    const auto dec = decompose(w, fam);
    CHECK(std::holds_alternative<FrancoisePair>(dec) == zero_period);
    (zero_period ? solved : blocked)++;
    if (const auto* pr = std::get_if<FrancoisePair>(&dec)) {
      CHECK((w - pr->g() * fam.dF() - differential(pr->r())).is_zero());
      CHECK(d_planar(w) == wedge(differential(pr->g()), fam.dF()));
    } else {
      CHECK(std::get<NoSolution>(dec).witness == period_of_form(w, fam));
    }
  }
  CHECK(solved > 20);
  CHECK(blocked > 20);
}

TEST_CASE("Gelfand-Leray on random zero-period inputs") {
  std::mt19937 rng(7);
  for (int i = 0; i < 30; ++i) {
    const PolyForm1 w = testing::random_relatively_exact(rng, 3, fam.dF());
    const auto res = melnikov_sequence(fam, w, 3);
    CHECK(res.melnikov[0].is_zero());
    CHECK(gelfand_leray_holds(res.sequence, w, fam));
    check_resubstitution(res.sequence, w);
    // M_1 = -period(w) and determinism.
    CHECK(melnikov_sequence(fam, w, 3).sequence == res.sequence);
  }
}

TEST_CASE("M_1 is minus the period") {
  std::mt19937 rng(8);
  for (int i = 0; i < 30; ++i) {
    const PolyForm1 w = testing::random_form(rng, 4);
    CHECK(melnikov_sequence(fam, w, 1).melnikov[0] == -period_of_form(w, fam));
  }
}
