#include <benchmark/benchmark.h>

#include "mcsh/datagen.hpp"
#include "mcsh/dynamics.hpp"
#include "mcsh/estimates.hpp"
#include "mcsh/spectral.hpp"

using namespace mcsh;

namespace {

GridSpec grid_of(int n) {
  GridSpec g;
  g.n = n;
  return g;
}

void BM_FftRoundTrip(benchmark::State& st) {
  const GridSpec g = grid_of(static_cast<int>(st.range(0)));
  const SpectralField f = random_hs_field(g, 1.0, 1.0, 1, FieldKind::Complex);
  for (auto _ : st) {
    auto x = f.to_physical();
    benchmark::DoNotOptimize(SpectralField::from_physical(g, x, FieldKind::Complex));
  }
}
BENCHMARK(BM_FftRoundTrip)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_DealiasedProduct(benchmark::State& st) {
  const GridSpec g = grid_of(static_cast<int>(st.range(0)));
  const SpectralField a = random_hs_field(g, 1.0, 1.0, 1, FieldKind::Complex);
  const SpectralField b = random_hs_field(g, 1.0, 1.0, 2, FieldKind::Complex);
  for (auto _ : st) benchmark::DoNotOptimize(dealiased_product(a, b));
}
BENCHMARK(BM_DealiasedProduct)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_Step(benchmark::State& st) {
  DataRecipe r;
  r.grid = grid_of(static_cast<int>(st.range(0)));
  r.spectral_cutoff = 8.0;
  const HalfWaveState h = to_halfwave(make_compatible_data(r));
  for (auto _ : st) benchmark::DoNotOptimize(step(h, 1e-3, r.params));
}
BENCHMARK(BM_Step)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_BuiltinCorpus(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_builtin_corpus());
}
BENCHMARK(BM_BuiltinCorpus)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
