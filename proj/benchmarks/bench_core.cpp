#include <benchmark/benchmark.h>

#include "conforma/builtins.hpp"
#include "conforma/coeff.hpp"
#include "conforma/modules.hpp"

using namespace conforma;

namespace {

void BM_PolyMul(benchmark::State& state) {
  Poly p = (poly_d() + poly_l() * Rat(2) + Poly(Rat(1))).pow(4);
  Poly q = (poly_d() - poly_m() + Poly(Rat(3))).pow(4);
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_PolyMul);

void BM_JacobiTripleSymbolic(benchmark::State& state) {
  Algebra A = make_hv_ab();
  Element x(gen_L()), y(gen_H(1)), z(gen_H(2));
  for (auto _ : state) benchmark::DoNotOptimize(A.check_jacobi(x, y, z));
}
BENCHMARK(BM_JacobiTripleSymbolic);

void BM_AxiomSweepWindow4(benchmark::State& state) {
  Algebra A = make_hv_ab();
  auto gens = A.window_gens(4);
  for (auto _ : state) benchmark::DoNotOptimize(axiom_sweep(A, gens));
}
BENCHMARK(BM_AxiomSweepWindow4);

void BM_ModeBracket(benchmark::State& state) {
  Algebra A = make_hv_ab();
  ModeElement x({gen_L(), 3}, Poly(Rat(1)));
  ModeElement y({gen_H(2), 1}, Poly(Rat(1)));
  for (auto _ : state) benchmark::DoNotOptimize(mode_bracket(A, x, y));
}
BENCHMARK(BM_ModeBracket);

void BM_RankOneSolveVir(benchmark::State& state) {
  Algebra vir = make_vir();
  for (auto _ : state) benchmark::DoNotOptimize(rank_one_solver(vir, 1, 1));
}
BENCHMARK(BM_RankOneSolveVir);

}  // namespace

BENCHMARK_MAIN();
