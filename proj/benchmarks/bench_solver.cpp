#include <benchmark/benchmark.h>

#include "bex/brute_force.hpp"
#include "bex/generators.hpp"
#include "bex/solver.hpp"

namespace {

using namespace bex;

// Exact solve on seeded instances, pairs sampled by random walks. Ground
// sizes beyond the component cap exercise the single-block path.
void BM_Solve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SplitRepresentation rep = gen_elementary_split(n, n / 2, 7, 3);
  const std::vector<BasisPairInstance> pairs = gen_compatible_pairs(rep, 99, 64);
  SolveContext ctx(rep);
  std::size_t i = 0;
  for (auto _ : state) {
    const SolveResult res = ctx.solve(pairs[i++ % pairs.size()]);
    benchmark::DoNotOptimize(res.distance);
  }
}
BENCHMARK(BM_Solve)->Arg(8)->Arg(12)->Arg(16)->Arg(24)->Arg(40);

void BM_BruteForceDistance(benchmark::State& state) {
  const SplitRepresentation rep = gen_sparse_paving(7, 3, 5, 3);
  const MatroidOracle oracle = rep_oracle(rep);
  const std::vector<BasisPairInstance> pairs = gen_compatible_pairs(rep, 21, 16);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto d = bf_exchange_distance(oracle, pairs[i++ % pairs.size()]);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_BruteForceDistance);

void BM_RepRank(benchmark::State& state) {
  const SplitRepresentation rep = gen_elementary_split(32, 16, 3, 6);
  SplitMix64 rng(11);
  std::vector<ElementSet> queries;
  for (int i = 0; i < 256; ++i) {
    queries.push_back(ElementSet::from_bits(rng.next() & rep.ground.members.bits()));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rep_rank(rep, queries[i++ % queries.size()]));
  }
}
BENCHMARK(BM_RepRank);

void BM_LongestMonotone(benchmark::State& state) {
  const SplitRepresentation rep = gen_paving(10, 4, 13, 3);
  const std::vector<BasisPairInstance> pairs = gen_compatible_pairs(rep, 31, 32);
  SolveContext ctx(rep);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ctx.longest_monotone(pairs[i++ % pairs.size()]).size());
  }
}
BENCHMARK(BM_LongestMonotone);

}  // namespace

BENCHMARK_MAIN();
