#include <benchmark/benchmark.h>

#include "hiero/groebner.hpp"
#include "hiero/harness.hpp"
#include "hiero/stanley_reisner.hpp"
#include "hiero/tablet.hpp"
#include "hiero/zoo.hpp"

using namespace hiero;

static void BM_MinimalPrimes(benchmark::State& state, const char* name) {
  const Problem p = fixture(name);
  const MonomialIdeal J = initial_ideal(p.order, p.ideal);
  const Polarization pol = polarize(J, Grading::standard(J.nvars()));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_primes(pol.ideal));
}
BENCHMARK_CAPTURE(BM_MinimalPrimes, ex3.3, "ex3.3");
BENCHMARK_CAPTURE(BM_MinimalPrimes, commuting3, "commuting3");

static void BM_Tablet(benchmark::State& state, const char* name) {
  const Problem p = fixture(name);
  for (auto _ : state) benchmark::DoNotOptimize(build_tablet(p.ideal, p.order, p.grading));
}
BENCHMARK_CAPTURE(BM_Tablet, ex1.2, "ex1.2");
BENCHMARK_CAPTURE(BM_Tablet, kl, "kl");
BENCHMARK_CAPTURE(BM_Tablet, commuting3, "commuting3")->Unit(benchmark::kMillisecond);

static void BM_EquidimSweep(benchmark::State& state) {
  const int upto = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(Conjecture::Equidim, upto, 1));
}
BENCHMARK(BM_EquidimSweep)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
