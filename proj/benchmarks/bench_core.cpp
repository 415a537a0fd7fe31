#include <benchmark/benchmark.h>

#include "newton/bounds.hpp"
#include "newton/degeneration.hpp"
#include "newton/multiplicities.hpp"
#include "newton/polytope.hpp"
#include "newton/thresholds.hpp"

using namespace newton;

namespace {

MonomialIdeal staircase6() {
  return MonomialIdeal(2, {{6, 0}, {5, 1}, {3, 2}, {2, 3}, {1, 4}, {0, 6}});
}

void BM_Lct(benchmark::State& state) {
  MonomialIdeal I = staircase6();
  for (auto _ : state) benchmark::DoNotOptimize(lct_monomial(I));
}
BENCHMARK(BM_Lct);

void BM_IntegralClosure(benchmark::State& state) {
  MonomialIdeal I(3, {{static_cast<long>(state.range(0)), 0, 0},
                      {0, static_cast<long>(state.range(0)), 0},
                      {0, 0, static_cast<long>(state.range(0))},
                      {1, 1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(integral_closure(I));
}
BENCHMARK(BM_IntegralClosure)->Arg(3)->Arg(5)->Arg(7);

void BM_MixedMultiplicities(benchmark::State& state) {
  MonomialIdeal I(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 4}, {1, 1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(mixed_multiplicities(I));
}
BENCHMARK(BM_MixedMultiplicities);

void BM_NuWalk(benchmark::State& state) {
  MonomialIdeal I(2, {{2, 0}, {0, 3}});
  MonomialIdeal m = maximal_power(2, 1);
  Int q = pow(Int(3), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nu_monomial(I, m, q));
}
BENCHMARK(BM_NuWalk)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

void BM_DegenerationOrder(benchmark::State& state) {
  DegenerationInput in;
  in.degrees = {2, 3, 4, 5};
  in.groups.assign(4, {});
  in.groups[1] = {{1, 0, 0, 2}, {1, 1, 0, 1}};
  in.groups[2] = {{0, 2, 0, 2}, {1, 1, 0, 2}};
  for (auto _ : state) benchmark::DoNotOptimize(degeneration_order(in));
}
BENCHMARK(BM_DegenerationOrder);

void BM_CheckBound(benchmark::State& state) {
  MonomialIdeal I = staircase6();
  for (auto _ : state) benchmark::DoNotOptimize(check_bound(I, 2));
}
BENCHMARK(BM_CheckBound);

}  // namespace

BENCHMARK_MAIN();
