// Copyright 2026 The ehcube Authors
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

// Exhaustive oracle costs on small instances.

#include <benchmark/benchmark.h>

#include "ehcube/ehcube.hpp"

namespace {

using ehcube::EnhancedHypercube;

void BM_BfsDiameter(benchmark::State& state) {
  const EnhancedHypercube g(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(ehcube::bfs_diameter(g));
}
BENCHMARK(BM_BfsDiameter)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_VertexFaultDiameter(benchmark::State& state) {
  const EnhancedHypercube g(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const int omega = static_cast<int>(state.range(2));
  ehcube::OracleConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ehcube::fault_diameter_exact(g, omega, ehcube::FaultKind::kVertex, config));
  }
}
BENCHMARK(BM_VertexFaultDiameter)->Args({4, 3, 5})->Args({5, 3, 4})->Unit(benchmark::kMillisecond);

void BM_EdgeFaultDiameter(benchmark::State& state) {
  const EnhancedHypercube g(4, 2);
  ehcube::OracleConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ehcube::fault_diameter_exact(g, 5, ehcube::FaultKind::kEdge, config));
  }
}
BENCHMARK(BM_EdgeFaultDiameter)->Unit(benchmark::kMillisecond);

void BM_Connectivity(benchmark::State& state) {
  const EnhancedHypercube g(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(ehcube::connectivity_exact(g));
}
BENCHMARK(BM_Connectivity)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
