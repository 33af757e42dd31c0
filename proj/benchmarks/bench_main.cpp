#include <benchmark/benchmark.h>

#include "wvg/constructions.hpp"
#include "wvg/lp.hpp"
#include "wvg/polytope.hpp"
#include "wvg/power.hpp"

using namespace wvg;

namespace {

// [n; 1, ..., 1] relaxed to a descending weight profile so the game has many
// distinct minimal winning coalitions.
WeightedRepresentation descending(int n) {
  RationalVector w;
  for (int i = n; i >= 1; --i) w.emplace_back(i);
  const long total = static_cast<long>(n) * (n + 1) / 2;
  return WeightedRepresentation(Rational(3 * total, 5), std::move(w));
}

void BM_TableauSolve(benchmark::State& state) {
  const auto program = WeightPolytope(realize(descending(static_cast<int>(state.range(0))))).explicit_program();
  LinearProgram lp = program;
  lp.objective.assign(lp.objective.size(), Rational(0));
  lp.objective[0] = Rational(1);
  for (auto _ : state) benchmark::DoNotOptimize(solve(lp));
}
BENCHMARK(BM_TableauSolve)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_OptimizerWarmStart(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const WeightPolytope poly(realize(descending(n)));
  PolytopeOptimizer opt(poly);
  RationalVector obj(static_cast<std::size_t>(n));
  int flip = 0;
  for (auto _ : state) {
    for (int i = 0; i < n; ++i) obj[static_cast<std::size_t>(i)] = Rational(((i + flip) % 3) - 1);
    ++flip;
    benchmark::DoNotOptimize(opt.maximize(obj));
  }
}
BENCHMARK(BM_OptimizerWarmStart)->Arg(6)->Arg(10)->Arg(12)->Unit(benchmark::kMicrosecond);

void BM_DiameterL1(benchmark::State& state) {
  const auto v = realize(descending(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(diameter_l1(v));
}
BENCHMARK(BM_DiameterL1)->Arg(4)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_DiameterLinf(benchmark::State& state) {
  const auto v = realize(descending(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(diameter_linf(v));
}
BENCHMARK(BM_DiameterLinf)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_DiameterVkst(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const auto v = make_vkst(s / 2, s, 2).game;
  for (auto _ : state) benchmark::DoNotOptimize(diameter_l1(v));
}
BENCHMARK(BM_DiameterVkst)->Arg(6)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ShapleyShubik(benchmark::State& state) {
  const auto v = realize(descending(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(shapley_shubik(v));
}
BENCHMARK(BM_ShapleyShubik)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Banzhaf(benchmark::State& state) {
  const auto v = realize(descending(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(penrose_banzhaf(v, true));
}
BENCHMARK(BM_Banzhaf)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
