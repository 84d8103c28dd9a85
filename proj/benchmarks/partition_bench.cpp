// Copyright 2026 The qcmap Authors
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

#include "qcmap/benchgen.hpp"
#include "qcmap/partition.hpp"

namespace {

void BM_OeeAggregateGraph(benchmark::State &state) {
  const auto q = static_cast<std::size_t>(state.range(0));
  const qcmap::InteractionGraph g =
      qcmap::aggregate_interactions(qcmap::slice_circuit(qcmap::random_qgf(q, 20 * q, 0.5, 1)));
  const qcmap::Partition init = qcmap::Partition::random(q, q / 10, 1);
  for (auto _ : state) benchmark::DoNotOptimize(qcmap::oee_partition(g, init));
}
BENCHMARK(BM_OeeAggregateGraph)->Arg(20)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_RoeeLookahead(benchmark::State &state) {
  const auto q = static_cast<std::size_t>(state.range(0));
  const qcmap::TimeslicedCircuit tsc = qcmap::slice_circuit(qcmap::random_qgf(q, 20 * q, 0.5, 2));
  const qcmap::InteractionGraph g = qcmap::lookahead_weights(tsc, 0);
  const qcmap::Partition init = qcmap::Partition::random(q, q / 10, 2);
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(qcmap::roee_partition(g, init));
    } catch (const qcmap::PartitionError &) {
    }
  }
}
BENCHMARK(BM_RoeeLookahead)->Arg(20)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

}  // namespace
