#include <benchmark/benchmark.h>

#include <vector>

#include "adamon/kernels.hpp"
#include "adamon/optimizer.hpp"
#include "adamon/rng.hpp"

using namespace adamon;

namespace {

std::vector<double> random_vec(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform(-1.0, 1.0);
  return v;
}

void bm_sum_serial(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto a = random_vec(n, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::serial::sum(a.data(), n));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}

void bm_sum_omp(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto a = random_vec(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::par::sum(a.data(), n));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}

void bm_sum_sq_serial(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto a = random_vec(n, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::serial::sum_sq(a.data(), n));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}

void bm_sum_sq_omp(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto a = random_vec(n, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::par::sum_sq(a.data(), n));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}

void bm_ema_serial(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  auto m = random_vec(n, 3);
  const auto g = random_vec(n, 4);
  for (auto _ : state) {
    kernels::serial::ema_update(m.data(), g.data(), 0.9, n);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}

void bm_ema_omp(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  auto m = random_vec(n, 3);
  const auto g = random_vec(n, 4);
  for (auto _ : state) {
    kernels::par::ema_update(m.data(), g.data(), 0.9, n);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}

// whole optimizer step, serial kernels vs dispatched (OpenMP) kernels
void bm_step(benchmark::State& state, bool parallel) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const bool saved = kernels::parallel_enabled();
  kernels::set_parallel(parallel);
  OptimizerConfig cfg{Variant::AMSGrad, StepSchedule::inverse_sqrt(0.1),
                      Beta1Schedule::constant(0.9), 0.99, 1e-8, d};
  OptimizerState s = init(cfg, std::vector<double>(d, 1.0));
  const auto g = random_vec(d, 5);
  for (auto _ : state) {
    step(s, g, cfg);
    benchmark::ClobberMemory();
  }
  kernels::set_parallel(saved);
  state.SetItemsProcessed(state.iterations() * static_cast<long>(d));
}

void bm_step_serial(benchmark::State& state) { bm_step(state, false); }
void bm_step_omp(benchmark::State& state) { bm_step(state, true); }

}  // namespace

BENCHMARK(bm_sum_serial)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(bm_sum_omp)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(bm_sum_sq_serial)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(bm_sum_sq_omp)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(bm_ema_serial)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(bm_ema_omp)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(bm_step_serial)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(bm_step_omp)->Arg(1 << 16)->Arg(1 << 20);

BENCHMARK_MAIN();
