#include <benchmark/benchmark.h>

#include "hiero/groebner.hpp"
#include "hiero/zoo.hpp"

using namespace hiero;

static void BM_Buchberger(benchmark::State& state, const char* name) {
  const Problem p = fixture(name);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(p.order, p.ideal));
}
BENCHMARK_CAPTURE(BM_Buchberger, ex1.3, "ex1.3");
BENCHMARK_CAPTURE(BM_Buchberger, ex3.3, "ex3.3");
BENCHMARK_CAPTURE(BM_Buchberger, commuting2, "commuting2");
BENCHMARK_CAPTURE(BM_Buchberger, commuting3, "commuting3")->Unit(benchmark::kMillisecond);
