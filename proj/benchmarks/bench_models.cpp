#include <benchmark/benchmark.h>

#include <cmath>

#include "galperin/classical.hpp"
#include "galperin/params.hpp"
#include "galperin/quantum.hpp"
#include "galperin/semiclassical.hpp"

using namespace galperin;

static void BM_SimulateExact(benchmark::State& state) {
  const BilliardParams p = BilliardParams::from_mass_ratio(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classical::simulate(p).count);
}
BENCHMARK(BM_SimulateExact)->Arg(1)->Arg(100)->Arg(10000);

static void BM_SimulateDouble(benchmark::State& state) {
  const BilliardParams p = BilliardParams::from_mass_ratio(std::pow(100.0, static_cast<double>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(classical::simulate(p).count);
}
BENCHMARK(BM_SimulateDouble)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_PiDigits(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classical::pi_digits(n));
}
BENCHMARK(BM_PiDigits)->Arg(8)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

static void BM_Cylinder(benchmark::State& state) {
  const double nu = static_cast<double>(state.range(0));
  double x = nu / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(quantum::cylinder(nu, x));
    x = x < 20 * nu ? x * 1.01 : nu / 2;
  }
}
BENCHMARK(BM_Cylinder)->Arg(3)->Arg(31)->Arg(100);

static void BM_ThetaMean(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double beta = kPi / 10;
  const double rho = 2.0 * n * kPi / beta;
  for (auto _ : state) benchmark::DoNotOptimize(quantum::theta_mean(rho, n, beta));
}
BENCHMARK(BM_ThetaMean)->Arg(1)->Arg(10);

static void BM_ThetaMeanQuadrature(benchmark::State& state) {
  const double beta = kPi / 10;
  for (auto _ : state) {
    benchmark::DoNotOptimize(quantum::theta_mean_quadrature(40.0, 1, beta, 1.0, quantum::Wave::Incident));
  }
}
BENCHMARK(BM_ThetaMeanQuadrature);

static void BM_SemiclassicalIntegration(benchmark::State& state) {
  const double R = static_cast<double>(state.range(0));
  const semiclassical::SemiclassicalConfig cfg(3, BilliardParams::from_mass_ratio(R * R), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(semiclassical::integrate_total_phase(cfg).value);
}
BENCHMARK(BM_SemiclassicalIntegration)->Arg(10)->Arg(100);

static void BM_QuantumCurve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quantum::sample_quantum_curve(n, kPi / 10, 1.0, 400));
}
BENCHMARK(BM_QuantumCurve)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
