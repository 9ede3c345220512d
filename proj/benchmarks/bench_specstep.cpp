#include <benchmark/benchmark.h>

#include <vector>

#include "specstep/dynamics.hpp"
#include "specstep/problem.hpp"
#include "specstep/solver.hpp"
#include "specstep/stepsize.hpp"

namespace {

using namespace specstep;

void BM_StepScalarBundle(benchmark::State& state) {
    const StepMemory mem = memory_from_products(2.0, 3.0, 9.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(step_scalars(mem, 0.5, 1.5, 3.0));
    }
}
BENCHMARK(BM_StepScalarBundle);

void BM_BuildMemory(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<double> x_prev(n, 0.0), x_cur(n), g_prev(n), g_cur(n);
    for (int i = 0; i < n; ++i) {
        x_cur[i] = 1.0 + 0.01 * i;
        g_prev[i] = 1.0 + 0.05 * i;
        g_cur[i] = 2.0 + 0.1 * i;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_memory(x_prev, x_cur, g_prev, g_cur));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildMemory)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

void BM_SolveBenchmarkBB1(benchmark::State& state) {
    const QuadraticProblem problem = QuadraticProblem::log_spectrum(10, 4.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            solve(problem, StepPolicy::bb1(), std::vector<double>(10, 0.0)));
    }
}
BENCHMARK(BM_SolveBenchmarkBB1);

void BM_SolveBenchmarkMR(benchmark::State& state) {
    const QuadraticProblem problem = QuadraticProblem::log_spectrum(10, 4.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            solve(problem, StepPolicy::mr(), std::vector<double>(10, 0.0)));
    }
}
BENCHMARK(BM_SolveBenchmarkMR);

void BM_ClassifyStability(benchmark::State& state) {
    const RecurrenceConfig cfg{100.0, 1.7, RecurrenceKind::Left};
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_stability(cfg));
    }
}
BENCHMARK(BM_ClassifyStability);

void BM_SimulateRecurrence(benchmark::State& state) {
    const RecurrenceConfig cfg{100.0, 1.7, RecurrenceKind::Left};
    const int steps = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate(cfg, 1.0, 1.0, steps));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SimulateRecurrence)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

}  // namespace

BENCHMARK_MAIN();
