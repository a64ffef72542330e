#include <benchmark/benchmark.h>

#include "spslat/spslat.hpp"

using namespace spslat;

namespace {

Instance sized(std::int64_t n) { return random_instance(17, std::size_t(n)); }

void BM_SwingPoset(benchmark::State& state) {
  const Instance inst = sized(state.range(0));
  const Drawing d(inst.lattice, inst.diagram);
  for (auto _ : state) benchmark::DoNotOptimize(ji_poset_via_swing(d));
  state.counters["elements"] = double(inst.lattice.size());
}
BENCHMARK(BM_SwingPoset)->Arg(20)->Arg(40)->Arg(80)->Arg(160);

void BM_OraclePoset(benchmark::State& state) {
  const Instance inst = sized(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ji_poset_oracle(inst.lattice));
  state.counters["elements"] = double(inst.lattice.size());
}
BENCHMARK(BM_OraclePoset)->Arg(20)->Arg(40)->Arg(80)->Arg(160);

void BM_CanonicalForm(benchmark::State& state) {
  const Instance inst = sized(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(inst.lattice));
}
BENCHMARK(BM_CanonicalForm)->Arg(20)->Arg(80)->Arg(160);

void BM_Enumerate(benchmark::State& state) {
  const auto n = std::size_t(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(n, n, 2, true));
}
BENCHMARK(BM_Enumerate)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CheckAll(benchmark::State& state) {
  const Instance inst = sized(state.range(0));
  const FinitePoset p = ji_poset_via_swing(Drawing(inst.lattice, inst.diagram)).order;
  for (auto _ : state) benchmark::DoNotOptimize(check_all(p));
}
BENCHMARK(BM_CheckAll)->Arg(40)->Arg(160);

}  // namespace

BENCHMARK_MAIN();
