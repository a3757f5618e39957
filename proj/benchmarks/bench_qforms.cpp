#include "qforms/diffring.hpp"
#include "qforms/discovery.hpp"
#include "qforms/forms.hpp"
#include "qforms/solutions.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_SeriesMul(benchmark::State& state) {
    long order = state.range(0);
    qforms::LaurentSeries p = qforms::series_scriptP(order);
    qforms::LaurentSeries e = qforms::series_e(order);
    for (auto _ : state) benchmark::DoNotOptimize(p * e);
}
BENCHMARK(BM_SeriesMul)->Arg(50)->Arg(100)->Arg(200);

void BM_SeriesInvert(benchmark::State& state) {
    long order = state.range(0);
    qforms::LaurentSeries e = qforms::series_e(order);
    for (auto _ : state) benchmark::DoNotOptimize(qforms::invert(e, order));
}
BENCHMARK(BM_SeriesInvert)->Arg(100)->Arg(200);

void BM_LambertExpand(benchmark::State& state) {
    long order = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(qforms::lambert(3, true, order));
}
BENCHMARK(BM_LambertExpand)->Arg(200)->Arg(2000);

void BM_EvalPoly(benchmark::State& state) {
    qforms::WeightedPoly g = qforms::modular_solution_F(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(qforms::eval_poly(g, 100));
}
BENCHMARK(BM_EvalPoly)->Arg(8)->Arg(24)->Arg(40);

void BM_OdeResidual(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    qforms::LaurentSeries f = qforms::eval_poly(qforms::modular_solution_F(k), 100);
    for (auto _ : state) benchmark::DoNotOptimize(qforms::ode_residual(f, k, 100));
}
BENCHMARK(BM_OdeResidual)->Arg(8)->Arg(24)->Arg(40);

void BM_SolveRelation(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qforms::solve_relation(k, 0, 40));
}
BENCHMARK(BM_SolveRelation)->Arg(8)->Arg(16)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
