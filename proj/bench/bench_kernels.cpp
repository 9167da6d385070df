// Parallel kernels against their serial references. Thread count follows
// OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <algorithm>

#include "k3v/reference.hpp"

namespace k3v {
namespace {

// Every stride-th vector of each norm shell, closed under negation.
std::vector<std::vector<IntVector>> sparse_lists(std::int64_t m, std::size_t stride) {
  auto full = e8_norm_lists(m);
  std::vector<std::vector<IntVector>> out = {full[0]};
  for (std::size_t k = 1; k < full.size(); ++k) {
    std::vector<IntVector> pick;
    for (std::size_t i = 0; i < full[k].size(); i += stride) {
      pick.push_back(full[k][i]);
      IntVector neg = full[k][i];
      for (auto& x : neg) x = -x;
      pick.push_back(neg);
    }
    std::sort(pick.begin(), pick.end());
    pick.erase(std::unique(pick.begin(), pick.end()), pick.end());
    out.push_back(std::move(pick));
  }
  return out;
}

const ParamPoint kPoint = {{Var::s, BigRational(1, 2)}, {Var::r, BigRational(1, 3)}};

void BM_EnumerateParallel(benchmark::State& state) {
  const LatticeSpace e8 = build(SpaceKind::E8);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_by_norm(e8, state.range(0)));
}
BENCHMARK(BM_EnumerateParallel)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_EnumerateSerial(benchmark::State& state) {
  const LatticeSpace e8 = build(SpaceKind::E8);
  for (auto _ : state) benchmark::DoNotOptimize(reference::enumerate_by_norm(e8, state.range(0)));
}
BENCHMARK(BM_EnumerateSerial)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_RootSearchParallel(benchmark::State& state) {
  const FamilySpec f = build_family(FamilyName::TorusStandard);
  const auto lists = sparse_lists(2, 30);
  for (auto _ : state) benchmark::DoNotOptimize(root_search_at_point(f.triple, kPoint, state.range(0), lists));
}
BENCHMARK(BM_RootSearchParallel)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RootSearchSerial(benchmark::State& state) {
  const FamilySpec f = build_family(FamilyName::TorusStandard);
  const auto lists = sparse_lists(2, 30);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::root_search_at_point(f.triple, kPoint, state.range(0), lists));
  }
}
BENCHMARK(BM_RootSearchSerial)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SweepClassReduced(benchmark::State& state) {
  const FamilySpec f = build_family(FamilyName::Circle);
  const auto lists = sparse_lists(2, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exclusion_sweep(f, 1, lists));
}
BENCHMARK(BM_SweepClassReduced)->Arg(180)->Arg(90)->Unit(benchmark::kMillisecond);

void BM_SweepPerCandidate(benchmark::State& state) {
  const FamilySpec f = build_family(FamilyName::Circle);
  const auto lists = sparse_lists(2, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::exclusion_sweep(f, 1, lists));
}
BENCHMARK(BM_SweepPerCandidate)->Arg(180)->Arg(90)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace k3v

BENCHMARK_MAIN();
