/* This is flagvar_bench.cpp */

#include <benchmark/benchmark.h>

#include "flagvar/git_unstable.hpp"
#include "flagvar/oracle.hpp"
#include "flagvar/root_datum.hpp"
#include "flagvar/vgit.hpp"
#include "flagvar/weyl.hpp"

using namespace flagvar;

namespace {

std::vector<int> levi_without(int rank, int node) {
  std::vector<int> nodes;
  for (int j = 1; j <= rank; ++j)
    if (j != node) nodes.push_back(j);
  return nodes;
}

void BM_quotient_E7_7(benchmark::State& state) {
  const RootDatum d = build_root_datum(Family::E, 7);
  for (auto _ : state) {
    ParabolicQuotient q = parabolic_quotient(d, levi_without(7, 7));
    benchmark::DoNotOptimize(q.reps.size());
  }
}
BENCHMARK(BM_quotient_E7_7)->Unit(benchmark::kMillisecond);

void BM_ladder_E7_7(benchmark::State& state) {
  const RootDatum d = build_root_datum(Family::E, 7);
  for (auto _ : state) {
    Ladder lad = build_ladder(d, 7);
    benchmark::DoNotOptimize(lad.k_max);
  }
}
BENCHMARK(BM_ladder_E7_7)->Unit(benchmark::kMillisecond);

void BM_bruhat_queries_D6_6(benchmark::State& state) {
  const RootDatum d = build_root_datum(Family::D, 6);
  const ParabolicQuotient q = parabolic_quotient(d, levi_without(6, 6));
  for (auto _ : state) {
    int hits = 0;
    for (const WeylElement& a : q.reps)
      for (const WeylElement& b : q.reps) hits += q.leq(a, b) ? 1 : 0;
    benchmark::DoNotOptimize(hits);
  }
}
BENCHMARK(BM_bruhat_queries_D6_6)->Unit(benchmark::kMillisecond);

void BM_unstable_set_B3_2(benchmark::State& state) {
  const RootDatum d = build_root_datum(Family::B, 3);
  const Linearization lin = axis_linearization(d, 2, 1, Rat(0));
  for (auto _ : state) {
    UnstableLocus locus = unstable_set(d, {2}, lin);
    benchmark::DoNotOptimize(locus.dimension());
  }
}
BENCHMARK(BM_unstable_set_B3_2)->Unit(benchmark::kMillisecond);

void BM_chamber_decomposition_D6_6(benchmark::State& state) {
  const RootDatum d = build_root_datum(Family::D, 6);
  const Ladder lad = build_ladder(d, 6);
  for (auto _ : state) {
    ChamberReport rep = chamber_decomposition(lad, 1);
    benchmark::DoNotOptimize(rep.chambers.size());
  }
}
BENCHMARK(BM_chamber_decomposition_D6_6)->Unit(benchmark::kMillisecond);

void BM_oracle_Gr36(benchmark::State& state) {
  for (auto _ : state) {
    OracleReport r = compare(6, 3, 1, Rat(0), 5, 42);
    benchmark::DoNotOptimize(r.mismatches.size());
  }
}
BENCHMARK(BM_oracle_Gr36)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
