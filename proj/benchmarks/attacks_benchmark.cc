// Copyright 2026 The enpriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdint>
#include <vector>

#include "benchmark/benchmark.h"
#include "enpriv/attacks.h"
#include "enpriv/database.h"
#include "enpriv/dp_audit.h"
#include "enpriv/graph.h"
#include "enpriv/noise.h"
#include "enpriv/oracle.h"
#include "enpriv/random.h"
#include "enpriv/recommender.h"
#include "enpriv/utility.h"

namespace enpriv {
namespace {

void BM_BruteForce(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  const BinaryDatabase db = RandomDatabase(n, 0.5, 1).value();
  uint64_t seed = 0;
  for (auto _ : state) {
    NoisyOracle oracle =
        NoisyOracle::Create(db, NoiseMechanism::BoundedUniform(1), ++seed)
            .value();
    benchmark::DoNotOptimize(BruteForceReconstruct(oracle, 1).value());
  }
}
BENCHMARK(BM_BruteForce)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_AdaptiveSplit(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  std::vector<uint8_t> bits(n, 0);
  Rng rng(3);
  for (int i = 0; i < 5; ++i) bits[UniformIndex(rng, n)] = 1;
  const BinaryDatabase db = BinaryDatabase::Create(bits).value();
  int64_t queries = 0;
  for (auto _ : state) {
    NoisyOracle oracle =
        NoisyOracle::Create(db, NoiseMechanism::Exact(), 0).value();
    const ReconstructionResult r = AdaptiveSplitReconstruct(oracle).value();
    queries = r.queries_used;
    benchmark::DoNotOptimize(r);
  }
  state.counters["queries"] = static_cast<double>(queries);
}
BENCHMARK(BM_AdaptiveSplit)->RangeMultiplier(4)->Range(64, 65536);

void BM_RelaxAndRound(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  const BinaryDatabase db = RandomDatabase(n, 0.2, 2).value();
  const double log2n = std::log2(static_cast<double>(n));
  RelaxOptions options;
  options.num_queries = static_cast<int64_t>(n * log2n * log2n);
  for (auto _ : state) {
    NoisyOracle oracle =
        NoisyOracle::Create(db, NoiseMechanism::BoundedUniform(3), 4).value();
    benchmark::DoNotOptimize(RelaxAndRoundReconstruct(oracle, options).value());
  }
}
BENCHMARK(BM_RelaxAndRound)->Arg(50)->Arg(100)->Arg(200)
    ->Unit(benchmark::kMillisecond);

void BM_DpAudit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ContactGraph g = StarGraph(n, 0, 1).value();
  const GraphRecommender rec = OverUtility(UtilityKind::kCommonNeighbors,
                                           MakeExponentialRecommender(1, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(DpAudit(rec, g, 1).value());
  }
}
BENCHMARK(BM_DpAudit)->RangeMultiplier(2)->Range(8, 64);

void BM_ExhaustiveAuditFiveNodes(benchmark::State& state) {
  const GraphRecommender rec = OverUtility(UtilityKind::kDirectEdge,
                                           MakeExponentialRecommender(1, 1));
  for (auto _ : state) {
    int64_t passed = 0;
    ForEachGraph(5, 0, [&](const ContactGraph& g) {
      passed += DpAudit(rec, g, 1).value().passed;
    }).IgnoreError();
    benchmark::DoNotOptimize(passed);
  }
}
BENCHMARK(BM_ExhaustiveAuditFiveNodes)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace enpriv

BENCHMARK_MAIN();
