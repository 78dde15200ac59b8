#include <benchmark/benchmark.h>

#include "exgraph/cycles.hpp"
#include "exgraph/expander.hpp"
#include "exgraph/generate.hpp"
#include "exgraph/graph.hpp"
#include "exgraph/kst.hpp"

namespace {

using namespace exg;

void BM_BfsBall(benchmark::State& state) {
  Graph g = random_gnp(static_cast<int>(state.range(0)), 8.0 / state.range(0), 1);
  for (auto _ : state) {
    auto ball = bfs_ball(g, VertexSet{0}, 4, {});
    benchmark::DoNotOptimize(ball);
  }
}
BENCHMARK(BM_BfsBall)->Arg(100)->Arg(1000)->Arg(10000);

void BM_ShortestCycle(benchmark::State& state) {
  Graph g = pg_incidence(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto c = shortest_cycle(g);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_ShortestCycle)->Arg(2)->Arg(4)->Arg(8);

void BM_CertifyExact(benchmark::State& state) {
  Graph g = random_gnp(static_cast<int>(state.range(0)), 0.4, 7);
  ExpanderParams p{0.4, 2.0};
  for (auto _ : state) {
    auto cert = certify_expander(g, p);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_CertifyExact)->Arg(12)->Arg(16)->Arg(20);

void BM_SpectrumExact(benchmark::State& state) {
  Graph g = pg_incidence(2);
  for (auto _ : state) {
    auto s = cycle_spectrum_exact(g);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_SpectrumExact);

void BM_KstFree(benchmark::State& state) {
  Graph g = pg_incidence(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = kst_free(g, 2, 2);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_KstFree)->Arg(2)->Arg(3)->Arg(4);

void BM_ExtractExpander(benchmark::State& state) {
  Graph g = random_gnp(static_cast<int>(state.range(0)), 10.0 / state.range(0), 3);
  for (auto _ : state) {
    auto r = extract_expander(g, 2.0, 0.4);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ExtractExpander)->Arg(50)->Arg(100)->Arg(200);

void BM_PgIncidence(benchmark::State& state) {
  for (auto _ : state) {
    Graph g = pg_incidence(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_PgIncidence)->Arg(3)->Arg(9);

} // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
