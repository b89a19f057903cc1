#include <benchmark/benchmark.h>

#include "vlp/vlp.hpp"

namespace {

void BM_BuildCoefficients(benchmark::State& state) {
  const vlp::FieldSpec field = vlp::make_field(-1);
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vlp::build_coefficients(field, limit));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildCoefficients)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_BuildCoefficientsSegmented(benchmark::State& state) {
  const vlp::FieldSpec field = vlp::make_field(-1);
  vlp::SieveOptions opts;
  opts.segment_threshold = 0;
  opts.workers = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vlp::build_coefficients(field, 1 << 22, opts));
}
BENCHMARK(BM_BuildCoefficientsSegmented)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_VisibleCount(benchmark::State& state) {
  const vlp::CountTables tables = vlp::make_count_tables(vlp::make_field(-1), 1'000'000);
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vlp::visible_count(tables, m, 1e6));
}
BENCHMARK(BM_VisibleCount)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_SprimeCount(benchmark::State& state) {
  const vlp::CountTables tables = vlp::make_count_tables(vlp::make_field(-1), 1'000'000);
  for (auto _ : state) benchmark::DoNotOptimize(vlp::sprime_count(tables, 2, 2, 1e6));
}
BENCHMARK(BM_SprimeCount)->Unit(benchmark::kMicrosecond);

void BM_CircleCount(benchmark::State& state) {
  const double r = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vlp::circle_count(r));
}
BENCHMARK(BM_CircleCount)->Arg(1'000)->Arg(10'000'000)->Unit(benchmark::kMicrosecond);

void BM_KernelQuadrature(benchmark::State& state) {
  const double T = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vlp::kernel_quadrature(2.0, T));
}
BENCHMARK(BM_KernelQuadrature)->Arg(250)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
