#include <benchmark/benchmark.h>

#include "topoadv/chr.hpp"
#include "topoadv/condition.hpp"
#include "topoadv/instant_graph.hpp"
#include "topoadv/solvability.hpp"
#include "topoadv/tasks.hpp"

using namespace topoadv;

namespace {

void BM_EnumerateIms(benchmark::State& state) {
  std::vector<int> participants;
  for (int p = 0; p <= state.range(0); ++p) participants.push_back(p);
  for (auto _ : state) {
    auto graphs = enumerate_ims(participants);
    benchmark::DoNotOptimize(graphs);
  }
}
BENCHMARK(BM_EnumerateIms)->Arg(1)->Arg(2)->Arg(3);

void BM_ChrRounds(benchmark::State& state) {
  const Complex base = standard_chromatic_simplex(2);
  const int rounds = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Subdivision stage = identity_stage(base);
    for (int r = 0; r < rounds; ++r) stage = chr(stage);
    benchmark::DoNotOptimize(stage);
  }
  state.SetComplexityN(rounds);
}
BENCHMARK(BM_ChrRounds)->Arg(1)->Arg(2);

void BM_BuildU(benchmark::State& state) {
  const Condition full = full_condition(2, static_cast<int>(state.range(0)), {"0", "1"});
  for (auto _ : state) {
    auto u = build_u(full);
    benchmark::DoNotOptimize(u);
  }
}
BENCHMARK(BM_BuildU)->Arg(1)->Arg(2);

void BM_Decide(benchmark::State& state) {
  const std::vector<std::string> binary{"0", "1"};
  const ColorlessTask consensus = make_kset(binary, 1);
  const Condition c = state.range(0) == 0 ? condition_c1(2, 1, 1, binary)
                                          : full_condition(2, 1, binary);
  const UComplex u = build_u(c);
  for (auto _ : state) {
    auto r = decide(consensus, u);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Decide)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
