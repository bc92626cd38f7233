// Copyright 2026 The eil Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "eil/constructions.h"
#include "eil/corpus.h"
#include "eil/invariants.h"
#include "eil/monomial_ideal.h"
#include "eil/regularity.h"
#include "eil/resolution.h"

namespace eil {
namespace {

void BM_InducedMatching(benchmark::State& state) {
  const Graph g = Graph::Cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(InducedMatchingNumber(g).count);
}
BENCHMARK(BM_InducedMatching)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_CochordNumber(benchmark::State& state) {
  const Graph g = Graph::Cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(CochordalCoverNumber(g).upper);
}
BENCHMARK(BM_CochordNumber)->Arg(8)->Arg(10)->Arg(12);

void BM_OrdinaryPower(benchmark::State& state) {
  const MonomialIdeal i = EdgeIdeal(Graph::Cycle(10));
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Power(i, r).NumGens());
}
BENCHMARK(BM_OrdinaryPower)->DenseRange(2, 4);

void BM_SymbolicPowerBox(benchmark::State& state) {
  const Graph g = Graph::Cycle(10);
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(SymbolicPowerEdge(g, r).NumGens());
}
BENCHMARK(BM_SymbolicPowerBox)->DenseRange(2, 4);

void BM_SymbolicPowerIntersection(benchmark::State& state) {
  const Graph g = Graph::Cycle(8);
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(SymbolicPowerByIntersection(g, r).NumGens());
}
BENCHMARK(BM_SymbolicPowerIntersection)->DenseRange(2, 3);

void BM_RegularityFrame(benchmark::State& state) {
  const Graph g = Graph::Cycle(static_cast<int>(state.range(0)));
  const MonomialIdeal i = SymbolicPowerEdge(g, static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(RegularityQuotient(i));
}
BENCHMARK(BM_RegularityFrame)->Args({8, 1})->Args({8, 2})->Args({10, 2})->Args({8, 3})
    ->Unit(benchmark::kMillisecond);

void BM_RegularityLattice(benchmark::State& state) {
  const MonomialIdeal i = SymbolicPowerEdge(Graph::Cycle(6), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(RegularityQuotientFromLattice(i));
}
BENCHMARK(BM_RegularityLattice)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_RegularityRational(benchmark::State& state) {
  RegularityOptions o;
  o.field = Field::Rational();
  const MonomialIdeal i = Power(EdgeIdeal(Graph::Cycle(7)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(RegularityQuotient(i, o));
}
BENCHMARK(BM_RegularityRational)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = AttachHT({Graph::Cycle(5), {{0, StarOfCliquesSpec{{3}}}}}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(CanonicalCode(g));
}
BENCHMARK(BM_CanonicalForm);

void BM_RandomUnicyclicCorpus(benchmark::State& state) {
  CorpusSpec s;
  s.kind = CorpusKind::kRandomUnicyclicHT;
  s.base = BaseFamily::kUnicyclic;
  s.min_vertices = 3;
  s.max_vertices = 6;
  s.count = 60;
  for (auto _ : state) benchmark::DoNotOptimize(GenerateCorpus(s).size());
}
BENCHMARK(BM_RandomUnicyclicCorpus)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace eil

BENCHMARK_MAIN();
