#include <benchmark/benchmark.h>

#include "hiero/groebner.hpp"
#include "hiero/kpoly.hpp"
#include "hiero/zoo.hpp"

using namespace hiero;

namespace {

// initial ideal and its polarization for a fixture, computed once
struct Input {
  MonomialIdeal initial;
  Polarization polar;
};

Input input(const char* name) {
  const Problem p = fixture(name);
  MonomialIdeal J = initial_ideal(p.order, p.ideal);
  Polarization pol = polarize(J, Grading::standard(J.nvars()));
  return {std::move(J), std::move(pol)};
}

}  // namespace

static void BM_Split(benchmark::State& state, const char* name) {
  const Input in = input(name);
  const Grading g = Grading::standard(in.initial.nvars());
  for (auto _ : state) benchmark::DoNotOptimize(kpoly_split(in.initial, g));
}
BENCHMARK_CAPTURE(BM_Split, ex3.3, "ex3.3");
BENCHMARK_CAPTURE(BM_Split, commuting3, "commuting3");

static void BM_Taylor(benchmark::State& state, const char* name) {
  const Input in = input(name);
  const Grading g = Grading::standard(in.initial.nvars());
  for (auto _ : state) benchmark::DoNotOptimize(kpoly_taylor(in.initial, g));
}
BENCHMARK_CAPTURE(BM_Taylor, ex1.3, "ex1.3");
BENCHMARK_CAPTURE(BM_Taylor, ex3.6, "ex3.6-4321");

static void BM_Faces(benchmark::State& state, const char* name) {
  const Input in = input(name);
  for (auto _ : state) benchmark::DoNotOptimize(kpoly_faces(in.polar.ideal, in.polar.grading));
}
BENCHMARK_CAPTURE(BM_Faces, ex3.3, "ex3.3");
BENCHMARK_CAPTURE(BM_Faces, commuting3, "commuting3");
