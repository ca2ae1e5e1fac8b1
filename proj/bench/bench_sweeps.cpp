#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "polariton/material.hpp"
#include "polariton/sweep.hpp"

using namespace polariton;

namespace {

MaterialSpec five_resonances() {
  MaterialSpec s;
  const double w2[] = {2.0, 9.0, 40.0, 150.0, 700.0};
  for (double w : w2) s.resonances.push_back({w, 0.12 * w, 0.0, std::nullopt});
  return s;
}

std::vector<double> grid(std::size_t n) {
  std::vector<double> ks(n);
  for (std::size_t i = 0; i < n; ++i) ks[i] = std::pow(10.0, -2.0 + 4.0 * static_cast<double>(i) / (n - 1));
  return ks;
}

void dispersion_serial(benchmark::State& state) {
  const auto s = five_resonances();
  const auto ks = grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::dispersion_sweep(s, ks));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void dispersion_omp(benchmark::State& state) {
  const auto s = five_resonances();
  const auto ks = grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(omp::dispersion_sweep(s, ks));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void sum_rules_serial(benchmark::State& state) {
  const auto s = five_resonances();
  const auto ks = grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::sum_rule_sweep(s, ks));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void sum_rules_omp(benchmark::State& state) {
  const auto s = five_resonances();
  const auto ks = grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(omp::sum_rule_sweep(s, ks));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

// Smooth but oscillatory, similar in cost profile to the kernel integrand.
double integrand(double k) { return std::exp(-0.02 * k * k) * std::sin(3.0 * k) * std::cos(0.5 * k * k); }

void panels_serial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::integrate_panels(integrand, 0.0, 30.0, static_cast<int>(state.range(0)), 1e-11));
}

void panels_omp(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(omp::integrate_panels(integrand, 0.0, 30.0, static_cast<int>(state.range(0)), 1e-11));
}

}  // namespace

BENCHMARK(dispersion_serial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(dispersion_omp)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(sum_rules_serial)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(sum_rules_omp)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(panels_serial)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(panels_omp)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
