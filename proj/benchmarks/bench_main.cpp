#include <benchmark/benchmark.h>

#include "lindelof/coeff_functions.hpp"
#include "lindelof/continuation.hpp"
#include "lindelof/differences.hpp"
#include "lindelof/expansions.hpp"
#include "lindelof/saddle_boundary.hpp"

namespace {

using namespace lindelof;

void BM_ContinueConstant(benchmark::State& state) {
  const auto f = make_builtin(BuiltinKind::Constant, {1.0});
  for (auto _ : state) benchmark::DoNotOptimize(continue_gf(f, {10.0, 0.0}));
}
BENCHMARK(BM_ContinueConstant)->Unit(benchmark::kMillisecond);

void BM_ContinueExpSqrt(benchmark::State& state) {
  const auto f = make_builtin(BuiltinKind::ExpPower, {1.0, 0.5});
  const double log_z = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(continue_gf_log(f, log_z));
}
BENCHMARK(BM_ContinueExpSqrt)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ContinueSaddle(benchmark::State& state) {
  const auto f = make_builtin(BuiltinKind::ExpPower, {1.0, -1.0});
  const double log_z = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(continue_gf_log(f, log_z));
}
BENCHMARK(BM_ContinueSaddle)->Arg(100)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_DirectSum(benchmark::State& state) {
  const auto f = make_builtin(BuiltinKind::ExpPower, {1.0, 0.5});
  for (auto _ : state) benchmark::DoNotOptimize(direct_sum(f, {-0.999, 0.0}));
}
BENCHMARK(BM_DirectSum)->Unit(benchmark::kMillisecond);

void BM_DifferencesExact(benchmark::State& state) {
  DifferenceRequest req;
  req.kind = SequenceKind::ExpInvPlus;
  req.n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(differences_exact(req));
}
BENCHMARK(BM_DifferencesExact)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_GammaRoots(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gamma_eq_minus_one_roots(8));
}
BENCHMARK(BM_GammaRoots)->Unit(benchmark::kMicrosecond);

void BM_AlgebraicExpansion(benchmark::State& state) {
  const auto f = make_builtin(BuiltinKind::ExpPower, {1.0, 0.5});
  for (auto _ : state) benchmark::DoNotOptimize(algebraic_expansion(f, 3.0));
}
BENCHMARK(BM_AlgebraicExpansion)->Unit(benchmark::kMicrosecond);

void BM_AbelCoefficient(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(abel_taylor_coeff(-1.0, 0.5, 3));
}
BENCHMARK(BM_AbelCoefficient)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
