// Copyright 2026 The RamseyKit Authors
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


#include <memory>
#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "ramseykit/arrow.h"
#include "ramseykit/canonical.h"
#include "ramseykit/class_engine.h"
#include "ramseykit/class_spec.h"
#include "ramseykit/ergodic.h"
#include "ramseykit/named_structures.h"
#include "ramseykit/presets.h"

namespace ramseykit {
namespace {

void BM_ArrowCompleteGraph(benchmark::State& state) {
  const ArrowQuery q{CompleteGraph(static_cast<int>(state.range(0))),
                     CompleteGraph(3), CompleteGraph(2)};
  ArrowOptions options;
  options.threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    absl::StatusOr<ArrowCertificate> cert = CheckArrow(q, options);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_ArrowCompleteGraph)
    ->Args({5, 1})
    ->Args({6, 1})
    ->Args({6, 4})
    ->Unit(benchmark::kMillisecond);

void BM_ArrowChainEmbeddings(benchmark::State& state) {
  const ArrowQuery q{Chain(static_cast<int>(state.range(0))), Chain(3),
                     Chain(2), 2, 1, ArrowMode::kEmbeddings};
  for (auto _ : state) {
    absl::StatusOr<ArrowCertificate> cert = CheckArrow(q);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_ArrowChainEmbeddings)->Arg(5)->Arg(6)->Unit(
    benchmark::kMillisecond);

void BM_CanonicalizeRandomGraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  const Structure g = GraphFromEdges(n, edges);
  for (auto _ : state) benchmark::DoNotOptimize(Canonicalize(g));
}
BENCHMARK(BM_CanonicalizeRandomGraph)->Arg(6)->Arg(10)->Arg(16);

void BM_CanonicalizeCycle(benchmark::State& state) {
  // Vertex-transitive, so refinement alone does not split anything.
  const Structure g = CycleGraph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Canonicalize(g));
}
BENCHMARK(BM_CanonicalizeCycle)->Arg(6)->Arg(10);

void BM_GraphMembers(benchmark::State& state) {
  std::shared_ptr<const ClassSpec> preset = *PresetClass("graphs");
  for (auto _ : state) {
    // A fresh spec each round so the member cache starts empty.
    absl::StatusOr<ClassSpec> spec =
        ClassSpec::Create("graphs", preset->signature(), preset->axioms(),
                          preset->forbidden());
    benchmark::DoNotOptimize(Members(*spec, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_GraphMembers)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_PureSetPolytope(benchmark::State& state) {
  const OrderedExpansionSpec ex = *PresetExpansion("ordered-pure-sets");
  for (auto _ : state) {
    absl::StatusOr<PolytopeReport> r =
        ConsistencyPolytope(ex, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_PureSetPolytope)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace ramseykit

BENCHMARK_MAIN();
