#include "afspec/bdg_format.hpp"
#include "afspec/example1_model.hpp"
#include "afspec/ideal_lattice.hpp"
#include "afspec/kernels.hpp"
#include "afspec/topospace.hpp"

#include <benchmark/benchmark.h>

using namespace afspec;

namespace {

struct IdealBatch {
  SkeletonPtr host;
  std::vector<NodeSet> sets;
};

const IdealBatch& batch() {
  static const IdealBatch b = [] {
    IdealBatch out;
    out.host = build_skeleton(load_diagram(AFSPEC_DATA_DIR "/example2.bdg"), 5);
    for (const auto& e : enumerate_ideals(out.host)) out.sets.push_back(e.members());
    return out;
  }();
  return b;
}

void BM_ClassifySerial(benchmark::State& state) {
  const auto& b = batch();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::classify_serial(*b.host, b.sets));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(b.sets.size()));
}

void BM_ClassifyParallel(benchmark::State& state) {
  const auto& b = batch();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::classify_parallel(*b.host, b.sets));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(b.sets.size()));
}

void BM_ClosedInterior(benchmark::State& state) {
  const FiniteTopSpace x = example1_model(static_cast<int>(state.range(0)), 6);
  const Exec exec = state.range(1) ? Exec::Parallel : Exec::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(every_open_has_closed_with_interior(x, exec));
  state.SetLabel(exec == Exec::Parallel ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_ClassifySerial);
BENCHMARK(BM_ClassifyParallel);
BENCHMARK(BM_ClosedInterior)->ArgsProduct({{8, 32}, {0, 1}});

BENCHMARK_MAIN();
