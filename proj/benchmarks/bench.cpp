#include <benchmark/benchmark.h>

#include <random>

#include "fgv/godbillon.hpp"
#include "fgv/linsolve.hpp"
#include "fgv/oracle.hpp"
#include "fgv/parse.hpp"

using namespace fgv;

namespace {
const OvalFamily fam = OvalFamily::circles();
const PolyForm1 example1{parse_polynomial("y^2"), BivarPoly()};
}  // namespace

static void BM_Decompose(benchmark::State& state) {
  const auto deg = static_cast<unsigned>(state.range(0));
  // Odd degrees decompose; even degrees hit the nonzero-period branch.
  const PolyForm1 w{BivarPoly::monomial(Rational(1), deg, 1), BivarPoly::monomial(Rational(-1), 1, deg)};
  for (auto _ : state) benchmark::DoNotOptimize(decompose(w, fam));
}
BENCHMARK(BM_Decompose)->DenseRange(2, 7);

static void BM_MelnikovSequence(benchmark::State& state) {
  const auto order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(melnikov_sequence(fam, example1, order));
}
BENCHMARK(BM_MelnikovSequence)->Arg(4)->Arg(8)->Arg(12);

static void BM_SolveGV(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_gv_weightwise(fam, example1, k));
}
BENCHMARK(BM_SolveGV)->Arg(2)->Arg(4);

static void BM_SolveFractionFree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  RationalMatrix a(n, n);
  std::vector<Rational> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = Rational(num(rng), den(rng));
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(num(rng), den(rng));
  }
  for (auto& v : b) v.canonicalize();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j).canonicalize();
  for (auto _ : state) benchmark::DoNotOptimize(solve_fraction_free(a, b));
}
BENCHMARK(BM_SolveFractionFree)->RangeMultiplier(2)->Range(8, 32);

static void BM_Holonomy(benchmark::State& state) {
  const NumericForm w(example1);
  HolonomyConfig cfg;
  cfg.step_count = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(holonomy_return(fam, w, 1.0, 1e-2, cfg));
}
BENCHMARK(BM_Holonomy)->Arg(2000)->Arg(20000);

BENCHMARK_MAIN();
