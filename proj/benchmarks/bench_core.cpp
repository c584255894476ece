#include <benchmark/benchmark.h>

#include <numeric>

#include "kerov/decompose.hpp"
#include "kerov/kerov.hpp"
#include "kerov/nseries.hpp"
#include "kerov/oracle.hpp"

using namespace kerov;

namespace {

void BM_n_of_graph_star(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::vector<int> cyc(static_cast<std::size_t>(k));
  std::iota(cyc.begin(), cyc.end(), 1);
  BicoloredMap m = build_map(Permutation::identity(k), Permutation::from_cycles(k, {cyc}));
  for (auto _ : state) benchmark::DoNotOptimize(n_of_graph(m, k));
}
BENCHMARK(BM_n_of_graph_star)->Arg(4)->Arg(6)->Arg(7);

void BM_sigma_poly(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  CycleType mu = CycleType::of({k});
  for (auto _ : state) benchmark::DoNotOptimize(sigma_poly(mu, k));
}
BENCHMARK(BM_sigma_poly)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_kerov_polynomial(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kerov_polynomial(k));
}
BENCHMARK(BM_kerov_polynomial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_d_full(benchmark::State& state) {
  BicoloredMap m = build_map(Permutation::parse_cycles("(1 5)(2 7)(3)(4 8 6)"),
                             Permutation::parse_cycles("(1 7 4)(2 3 6)(5 8)"));
  for (auto _ : state) benchmark::DoNotOptimize(d_full(m));
}
BENCHMARK(BM_d_full);

void BM_mn_character(benchmark::State& state) {
  const long n = state.range(0);
  std::vector<long> rows;
  for (long r = n; r >= 1; --r) rows.push_back(r);
  YoungDiagram staircase(rows);
  CycleType mu = CycleType::of({static_cast<int>(n)});
  for (auto _ : state) benchmark::DoNotOptimize(mn_character(staircase, mu));
}
BENCHMARK(BM_mn_character)->Arg(4)->Arg(5);

void BM_free_cumulants(benchmark::State& state) {
  YoungDiagram lambda({6, 4, 4, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(free_cumulants_numeric(lambda, 8));
}
BENCHMARK(BM_free_cumulants);

}  // namespace

BENCHMARK_MAIN();
