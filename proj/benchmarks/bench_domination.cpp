#include <benchmark/benchmark.h>

#include "rookdom/closed_form.hpp"
#include "rookdom/oracle.hpp"
#include "rookdom/recursion.hpp"

namespace {

using rookdom::BoardDims;

void BM_ClosedForm(benchmark::State& state) {
  const BoardDims dims{static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(rookdom::domination_poly_closed(dims));
}
BENCHMARK(BM_ClosedForm)->Arg(8)->Arg(16)->Arg(32)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_SymmetricForm(benchmark::State& state) {
  const BoardDims dims{static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(rookdom::domination_poly_symmetric(dims));
}
BENCHMARK(BM_SymmetricForm)->Arg(8)->Arg(16)->Arg(32)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_Recursion(benchmark::State& state) {
  const BoardDims dims{static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(rookdom::domination_poly_recursive(dims));
}
BENCHMARK(BM_Recursion)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_EdgeCoverClosed(benchmark::State& state) {
  const BoardDims dims{static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(rookdom::edge_cover_poly(dims));
}
BENCHMARK(BM_EdgeCoverClosed)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const BoardDims dims{4, static_cast<std::uint32_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(rookdom::brute_force_domination(dims));
}
BENCHMARK(BM_Oracle)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_TotalCount(benchmark::State& state) {
  const BoardDims dims{static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(rookdom::total_dominating_sets(dims));
}
BENCHMARK(BM_TotalCount)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
