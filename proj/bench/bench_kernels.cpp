#include <benchmark/benchmark.h>

#include <map>

#include "posetkit/closure.hpp"
#include "posetkit/constructors.hpp"
#include "posetkit/corpus.hpp"
#include "posetkit/lattice.hpp"
#include "posetkit/residuation.hpp"
#include "posetkit/structure.hpp"

using namespace posetkit;

namespace {

// loop of k three-atom blocks: 4k + 2 elements
FinitePoset block_loop(std::size_t k) {
  GreechieDiagram g;
  for (std::size_t i = 0; i < 2 * k; ++i) g.atoms.push_back("a" + std::to_string(i));
  for (std::size_t b = 0; b < k; ++b) g.blocks.push_back({2 * b, 2 * b + 1, (2 * b + 2) % (2 * k)});
  return greechie_to_omp(g);
}

const FinitePoset& loop_poset(std::size_t k) {
  static std::map<std::size_t, FinitePoset> cache;
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, block_loop(k)).first;
  return it->second;
}

Exec exec_of(const benchmark::State& s) { return s.range(1) ? Exec::parallel : Exec::serial; }

void BM_Distributive(benchmark::State& state) {
  const auto& p = loop_poset(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_distributive_poset(p, exec_of(state)).holds);
  state.counters["n"] = static_cast<double>(p.size());
}

void BM_PseudoOrthomodular(benchmark::State& state) {
  const auto& p = loop_poset(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_pseudo_orthomodular(p, exec_of(state)).holds);
  state.counters["n"] = static_cast<double>(p.size());
}

void BM_OperatorPair(benchmark::State& state) {
  const auto& p = loop_poset(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto pair = operator_pair(p, OperatorKind::pseudo_om, exec_of(state));
    benchmark::DoNotOptimize(verify_operator_left_residuation(p, pair, exec_of(state)).holds);
  }
  state.counters["n"] = static_cast<double>(p.size());
}

void BM_CompletionOml(benchmark::State& state) {
  const auto& p = loop_poset(static_cast<std::size_t>(state.range(0)));
  const auto d = complete(p);
  for (auto _ : state) benchmark::DoNotOptimize(is_orthomodular_lattice(d, exec_of(state)).holds);
  state.counters["closed_sets"] = static_cast<double>(d.size());
}

void BM_CompletionResiduation(benchmark::State& state) {
  const auto& p = loop_poset(static_cast<std::size_t>(state.range(0)));
  const auto d = complete(p);
  const LatticeView l(d.as_poset());
  for (auto _ : state) {
    auto ops = bdm_transform(d, OperatorKind::pseudo_om, exec_of(state));
    benchmark::DoNotOptimize(verify_left_residuated_lattice(l, ops, exec_of(state)).left_residuated.holds);
  }
  state.counters["closed_sets"] = static_cast<double>(d.size());
}

void BM_Sdc(benchmark::State& state) {
  const auto& p = loop_poset(static_cast<std::size_t>(state.range(0)));
  const auto d = complete(p);
  for (auto _ : state) benchmark::DoNotOptimize(is_strongly_d_continuous(p, d, exec_of(state)).holds);
  state.counters["closed_sets"] = static_cast<double>(d.size());
}

void BM_Complete(benchmark::State& state) {
  const auto& p = loop_poset(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto d = complete(p, {kDefaultMaxClosedSets, exec_of(state)});
    benchmark::DoNotOptimize(d.as_poset(exec_of(state)).size());
  }
}

// second argument: 0 serial, 1 parallel
void sizes(benchmark::internal::Benchmark* b) {
  for (int k : {4, 8, 16})
    for (int par : {0, 1}) b->Args({k, par});
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_Distributive)->Apply(sizes);
BENCHMARK(BM_PseudoOrthomodular)->Apply(sizes);
BENCHMARK(BM_OperatorPair)->Apply(sizes);
BENCHMARK(BM_CompletionOml)->Apply(sizes);
BENCHMARK(BM_CompletionResiduation)->Apply(sizes);
BENCHMARK(BM_Sdc)->Apply(sizes);
BENCHMARK(BM_Complete)->Apply(sizes);

BENCHMARK_MAIN();
