#include "lenskit/lenskit.hpp"
#include "lenskit/sweeps.hpp"

#include <benchmark/benchmark.h>

using namespace lenskit;

namespace {

MarkovTriple deepest(unsigned depth) { return enumerate_tree(depth).back().triple; }

void BM_EnumerateTree(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_tree(static_cast<unsigned>(st.range(0))));
}
BENCHMARK(BM_EnumerateTree)->DenseRange(6, 14, 4);

void BM_DeriveAndVerifyQ(benchmark::State& st) {
  auto t = enumerate_tree(static_cast<unsigned>(st.range(0)));
  for (auto _ : st)
    for (const auto& e : t) benchmark::DoNotOptimize(verify_q(e.triple, derive_q(e.triple)).all());
  st.SetItemsProcessed(static_cast<int64_t>(st.iterations() * t.size()));
}
BENCHMARK(BM_DeriveAndVerifyQ)->Arg(8)->Arg(12);

void BM_MinimalPathHuge(benchmark::State& st) {
  MarkovTriple m = deepest(static_cast<unsigned>(st.range(0)));
  QTriple q = derive_q(m);
  Slope from(-m.p3() * m.p3(), m.p3() * q.q3 - 1), to(0, 1);
  for (auto _ : st) benchmark::DoNotOptimize(minimal_path(from, to));
}
BENCHMARK(BM_MinimalPathHuge)->Arg(6)->Arg(10)->Arg(14);

void BM_ClassifyOvertwistedPath(benchmark::State& st) {
  DecoratedPath p = totally_inconsistent_path(Slope(-3, 1), Slope(-8, 5));
  for (auto _ : st) benchmark::DoNotOptimize(classify(p));
}
BENCHMARK(BM_ClassifyOvertwistedPath);

void BM_BoundaryOfDiagram(benchmark::State& st) {
  MarkovTriple m = deepest(static_cast<unsigned>(st.range(0)));
  HorizontalDiagram z = build_Z(m, derive_q(m));
  for (auto _ : st) benchmark::DoNotOptimize(boundary_of_diagram(z));
}
BENCHMARK(BM_BoundaryOfDiagram)->Arg(4)->Arg(12);

void BM_SlideMutation(benchmark::State& st) {
  MarkovTriple m = deepest(10);
  HorizontalDiagram x = build_X(m, derive_q(m));
  for (auto _ : st) benchmark::DoNotOptimize(recognize_cp2(slide_mutation(x, Slot::First)));
}
BENCHMARK(BM_SlideMutation);

void BM_AtfForMarkov(benchmark::State& st) {
  MarkovTriple m = deepest(static_cast<unsigned>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(atf_for_markov(m));
}
BENCHMARK(BM_AtfForMarkov)->DenseRange(1, 5, 2);

void BM_CanonicalForm(benchmark::State& st) {
  AtfDiagram d = atf_for_markov(deepest(4));
  for (auto _ : st) benchmark::DoNotOptimize(canonical_form(d));
}
BENCHMARK(BM_CanonicalForm);

void BM_AcceptanceSweep(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(run_acceptance({}));
}
BENCHMARK(BM_AcceptanceSweep)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
