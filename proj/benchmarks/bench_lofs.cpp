#include <benchmark/benchmark.h>

#include "lofs/enumerate.hpp"
#include "lofs/factorisation.hpp"
#include "lofs/kan.hpp"
#include "lofs/lifting.hpp"
#include "lofs/topology.hpp"

using namespace lofs;

namespace {

std::vector<PreorderRef> all_of_size(std::size_t n) { return enumerate_preorders(n); }

void BM_EnumeratePreorders(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_preorders(n));
}
BENCHMARK(BM_EnumeratePreorders)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_FactoriseToTerminal(benchmark::State& state) {
  const auto a = objects::antichain(static_cast<std::size_t>(state.range(0)));
  const auto f = MonotoneMap::to_terminal(a);
  for (auto _ : state) benchmark::DoNotOptimize(factorise(f));
  state.counters["K"] = static_cast<double>(factorise(f).elements.size());
}
BENCHMARK(BM_FactoriseToTerminal)->DenseRange(1, 8)->Unit(benchmark::kMicrosecond);

void BM_AlgebraStructure(benchmark::State& state) {
  const auto objs = all_of_size(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    for (const auto& a : objs) benchmark::DoNotOptimize(algebra_structure(MonotoneMap::to_terminal(a)));
  state.counters["objects"] = static_cast<double>(objs.size());
}
BENCHMARK(BM_AlgebraStructure)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_KzOrthogonal(benchmark::State& state) {
  const auto a2 = objects::antichain(2);
  const auto d = objects::diamond();
  const MonotoneMap j(a2, d, {1, 2});
  const auto g = MonotoneMap::to_terminal(objects::chain(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(kz_orthogonal(j, g));
}
BENCHMARK(BM_KzOrthogonal)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

void BM_KanInjective(benchmark::State& state) {
  const auto family = embedding_family(static_cast<std::size_t>(state.range(0)));
  const auto a = objects::diamond();
  for (auto _ : state) benchmark::DoNotOptimize(kan_injective(a, family));
  state.counters["generators"] = static_cast<double>(family.members.size());
}
BENCHMARK(BM_KanInjective)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ScottOpens(benchmark::State& state) {
  const auto l = objects::chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scott_opens(*l));
}
BENCHMARK(BM_ScottOpens)->DenseRange(4, 12, 4)->Unit(benchmark::kMicrosecond);

void BM_FilterMonadLaws(benchmark::State& state) {
  const FiniteSpace x{objects::antichain(static_cast<std::size_t>(state.range(0)))};
  for (auto _ : state) benchmark::DoNotOptimize(check_filter_monad_laws(x));
}
BENCHMARK(BM_FilterMonadLaws)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
