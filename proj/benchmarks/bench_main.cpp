#include <benchmark/benchmark.h>

#include "sphroots/enumeration.hpp"
#include "sphroots/solver.hpp"
#include "sphroots/sphericity.hpp"

using namespace sphroots;

static void BM_BuildRootSystem(benchmark::State& state) {
  for (auto _ : state) {
    RootSystem rs(cartan_matrix({Series::E, 8}));
    benchmark::DoNotOptimize(rs.num_positive());
  }
}
BENCHMARK(BM_BuildRootSystem);

static void BM_KnopReduce(benchmark::State& state) {
  auto rs = RootSystem::of({Series::E, 8});
  SubgroupDatum h(LeviDatum::from_complement(rs, {0}), {CRoot{1}, CRoot{2}});
  for (auto _ : state) benchmark::DoNotOptimize(is_spherical_and_rank(h).rank);
}
BENCHMARK(BM_KnopReduce);

static std::vector<SubgroupDatum> e8_cases() {
  EnumerateOptions opts;
  opts.compute_sigma = false;
  opts.match_tables = false;
  std::vector<SubgroupDatum> out;
  for (auto& r : spherical_trivial_cases({Series::E, 8}, 2, 2, opts)) out.push_back(r.datum);
  return out;
}

static void BM_BaseSolveE8(benchmark::State& state) {
  auto cases = e8_cases();
  SolveOptions opts;
  opts.check_invariants = false;
  for (auto _ : state)
    for (const auto& h : cases) benchmark::DoNotOptimize(base_solve(h, opts).rank);
  state.SetItemsProcessed(state.iterations() * static_cast<long>(cases.size()));
}
BENCHMARK(BM_BaseSolveE8)->Unit(benchmark::kMillisecond);

static void BM_OptimizedSolveE8(benchmark::State& state) {
  auto cases = e8_cases();
  SolveOptions opts;
  opts.check_invariants = false;
  for (auto _ : state)
    for (const auto& h : cases) benchmark::DoNotOptimize(optimized_solve(h, Resolution::Table, opts).rank);
  state.SetItemsProcessed(state.iterations() * static_cast<long>(cases.size()));
}
BENCHMARK(BM_OptimizedSolveE8)->Unit(benchmark::kMillisecond);

static void BM_VerifyF4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_tables(Series::F, 4, 4).empty());
}
BENCHMARK(BM_VerifyF4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
