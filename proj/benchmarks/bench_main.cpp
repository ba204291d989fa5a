#include <benchmark/benchmark.h>

#include "gsqg/inequality_lab.hpp"
#include "gsqg/operators.hpp"
#include "gsqg/solver.hpp"

namespace {

gsqg::SpectralField field(int n, std::uint64_t index) {
  gsqg::EnsembleSpec e;
  e.grid.n = n;
  e.dealiased = true;
  return gsqg::random_test_field(e, index);
}

void BM_Multiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = field(n, 0);
  const auto g = field(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(gsqg::multiply(f, g));
}
BENCHMARK(BM_Multiply)->Arg(64)->Arg(128)->Arg(256);

void BM_Advect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto theta = field(n, 0);
  const auto u = gsqg::velocity_from_scalar(theta, gsqg::ModelParams{});
  for (auto _ : state) benchmark::DoNotOptimize(gsqg::advect(u, theta));
}
BENCHMARK(BM_Advect)->Arg(64)->Arg(128)->Arg(256);

void BM_IfRk4Step(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  gsqg::SimState s{field(n, 0), 0.0, 0, gsqg::ModelParams{}, 1e-3, 0.0};
  gsqg::SolverOptions opt;
  opt.cfl_limit = 1e9;
  for (auto _ : state) benchmark::DoNotOptimize(gsqg::step(s, 1e-3, opt));
}
BENCHMARK(BM_IfRk4Step)->Arg(64)->Arg(128);

void BM_TrilinearForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = field(n, 0);
  const auto g = field(n, 1);
  const auto h = field(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(gsqg::trilinear_form(f, g, h, 0.3));
}
BENCHMARK(BM_TrilinearForm)->Arg(16)->Arg(32);

}  // namespace
BENCHMARK_MAIN();
