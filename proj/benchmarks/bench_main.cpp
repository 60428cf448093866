#include <benchmark/benchmark.h>

#include "hsum/eta_engine.hpp"
#include "hsum/mzv_numeric.hpp"
#include "hsum/qsym.hpp"
#include "hsum/series.hpp"
#include "hsum/specialize.hpp"

using namespace hsum;

static void BM_StreamAdvance(benchmark::State& state) {
  const QSym u = complete(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    SpecializationStream<double> s(u);
    while (s.n() < 10000) s.advance();
    benchmark::DoNotOptimize(s.value());
  }
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_StreamAdvance)->Arg(2)->Arg(4)->Arg(6);

static void BM_QuasiShuffle(benchmark::State& state) {
  const QSym e = elementary(static_cast<int>(state.range(0)));
  const QSym h = complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(quasi_shuffle(e, h));
}
BENCHMARK(BM_QuasiShuffle)->DenseRange(2, 5);

// no cache, so every iteration sums from scratch
static void BM_ZetaValue(benchmark::State& state) {
  const Composition I = state.range(0) == 0 ? Composition{3} : Composition{3, 1, 2};
  ZetaEvaluator ev;
  for (auto _ : state) benchmark::DoNotOptimize(ev.zeta_value(I, 1e-10));
}
BENCHMARK(BM_ZetaValue)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_EtaNumeric(benchmark::State& state) {
  LhsDescriptor d({Factor{complete(static_cast<int>(state.range(0))), 0}}, EtaSpec{0, 2}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(eta_numeric(d, 1e-8));
}
BENCHMARK(BM_EtaNumeric)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_EtaSymbolic(benchmark::State& state) {
  const QSym u = elementary(static_cast<int>(state.range(0))) * complete(2);
  for (auto _ : state) benchmark::DoNotOptimize(eta_on_qsym(EtaSpec{0, 1, 1}, u));
}
BENCHMARK(BM_EtaSymbolic)->DenseRange(2, 4);

BENCHMARK_MAIN();
