#include <benchmark/benchmark.h>

#include <random>

#include "jacobi_bc/forward.hpp"
#include "jacobi_bc/spectral.hpp"

namespace {

jbc::JacobiCoefficients random_coefficients(std::size_t m) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> da(0.5, 2.0), db(-2.0, 2.0);
  jbc::JacobiCoefficients c;
  for (std::size_t k = 0; k < m; ++k) {
    c.a.push_back(da(rng));
    c.b.push_back(db(rng));
  }
  return c;
}

void step(benchmark::State& state, jbc::Execution exec) {
  const auto t_max = static_cast<std::size_t>(state.range(0));
  const auto c = random_coefficients(t_max);
  const auto f = jbc::ControlVector::delta();
  for (auto _ : state) benchmark::DoNotOptimize(jbc::step_forward(c, f, t_max, exec));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(t_max * t_max / 2));
}

void interval(benchmark::State& state, jbc::Execution exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const jbc::BoundaryProblem p{random_coefficients(n + 1), n, 0.5};
  const auto f = jbc::ControlVector::delta();
  for (auto _ : state)
    benchmark::DoNotOptimize(jbc::interval_forward(p, f, 4 * n, exec));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(4 * n * n));
}

void BM_StepSerial(benchmark::State& s) { step(s, jbc::Execution::serial); }
void BM_StepParallel(benchmark::State& s) { step(s, jbc::Execution::parallel); }
void BM_IntervalSerial(benchmark::State& s) { interval(s, jbc::Execution::serial); }
void BM_IntervalParallel(benchmark::State& s) { interval(s, jbc::Execution::parallel); }

}  // namespace

BENCHMARK(BM_StepSerial)->RangeMultiplier(2)->Range(256, 2048);
BENCHMARK(BM_StepParallel)->RangeMultiplier(2)->Range(256, 2048);
BENCHMARK(BM_IntervalSerial)->RangeMultiplier(2)->Range(256, 2048);
BENCHMARK(BM_IntervalParallel)->RangeMultiplier(2)->Range(256, 2048);

BENCHMARK_MAIN();
