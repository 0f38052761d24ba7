#include <benchmark/benchmark.h>

#include <vector>

#include "slicebench/diagnostics/autocorrelation.hpp"
#include "slicebench/math/cholesky.hpp"
#include "slicebench/math/rng.hpp"
#include "slicebench/samplers/chain.hpp"
#include "slicebench/targets/catalog.hpp"

namespace bm = benchmark;
using namespace slicebench;

static void BM_EssTransitionVolcano(bm::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto target = make_volcano_target(d);
  RngStream rng(1, 0);
  KernelState ks = make_state(target, Vector::Zero(d));
  std::uint64_t evals = 0;
  for (auto _ : state) {
    const auto rec = ess_transition(ks, target, rng);
    evals += rec.proposal_evals;
  }
  state.counters["evals_per_step"] =
      bm::Counter(static_cast<double>(evals) / static_cast<double>(state.iterations()));
}
BENCHMARK(BM_EssTransitionVolcano)->Arg(10)->Arg(100)->Arg(1000);

static void BM_PcnTransitionVolcano(bm::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto target = make_volcano_target(d);
  RngStream rng(2, 0);
  KernelState ks = make_state(target, Vector::Zero(d));
  for (auto _ : state) bm::DoNotOptimize(pcn_transition(ks, target, 0.5, rng));
}
BENCHMARK(BM_PcnTransitionVolcano)->Arg(10)->Arg(100)->Arg(1000);

static void BM_RwmTransitionVolcano(bm::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto target = make_volcano_target(d);
  RngStream rng(3, 0);
  KernelState ks = make_state(target, Vector::Zero(d));
  for (auto _ : state) bm::DoNotOptimize(rwm_transition(ks, target, 0.1, rng));
}
BENCHMARK(BM_RwmTransitionVolcano)->Arg(10)->Arg(100)->Arg(1000);

static void BM_RadialSliceTransitionVolcano(bm::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto target = make_volcano_target(d);
  RngStream rng(4, 0);
  KernelState ks = make_state(target, Vector::Ones(d));
  for (auto _ : state) bm::DoNotOptimize(simple_slice_transition_radial(ks, target, rng));
}
BENCHMARK(BM_RadialSliceTransitionVolcano)->Arg(10)->Arg(100)->Arg(1000);

static void BM_GaussianDrawDense(bm::State& state) {
  const int d = static_cast<int>(state.range(0));
  RngStream rng(5, 0);
  Matrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = rng.normal();
  const auto factor = CovarianceFactor::cholesky(a * a.transpose() + Matrix::Identity(d, d));
  for (auto _ : state) bm::DoNotOptimize(factor.sample(rng));
}
BENCHMARK(BM_GaussianDrawDense)->Arg(10)->Arg(100)->Arg(1000);

static void BM_Autocorrelation(bm::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  RngStream rng(6, 0);
  std::vector<double> series(n);
  for (auto& v : series) v = rng.normal();
  const int max_lag = static_cast<int>(std::min<std::size_t>(10000, n - 1));
  for (auto _ : state) bm::DoNotOptimize(autocorrelation(series, max_lag));
}
BENCHMARK(BM_Autocorrelation)->Arg(100000)->Arg(1000000)->Unit(bm::kMillisecond);

BENCHMARK_MAIN();
