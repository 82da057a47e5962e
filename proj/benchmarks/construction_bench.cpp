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

// Path construction and metric throughput.

#include <benchmark/benchmark.h>

#include <random>

#include "ehcube/ehcube.hpp"

namespace {

using ehcube::EnhancedHypercube;
using ehcube::Vertex;

std::vector<std::pair<Vertex, Vertex>> random_pairs(const EnhancedHypercube& g, std::size_t count) {
  std::mt19937_64 rng(7);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  while (pairs.size() < count) {
    const Vertex u{rng() & g.full_mask()};
    const Vertex v{rng() & g.full_mask()};
    if (u != v) pairs.emplace_back(u, v);
  }
  return pairs;
}

void BM_Distance(benchmark::State& state) {
  const EnhancedHypercube g(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto pairs = random_pairs(g, 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [u, v] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(ehcube::distance(g, u, v));
  }
}
BENCHMARK(BM_Distance)->Args({16, 8})->Args({62, 31});

void BM_DisjointPaths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const EnhancedHypercube g(n, static_cast<int>(state.range(1)));
  const auto pairs = random_pairs(g, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [u, v] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(ehcube::disjoint_paths(g, u, v, n + 1));
  }
}
BENCHMARK(BM_DisjointPaths)->Args({8, 4})->Args({20, 7})->Args({62, 31})->Args({62, 62});

void BM_VerifyPathSet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const EnhancedHypercube g(n, n / 2);
  const auto pairs = random_pairs(g, 64);
  std::vector<ehcube::PathSet> sets;
  for (const auto& [u, v] : pairs) sets.push_back(ehcube::disjoint_paths(g, u, v, n + 1));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ehcube::verify_path_set(g, sets[i++ % sets.size()]));
  }
}
BENCHMARK(BM_VerifyPathSet)->Arg(12)->Arg(40);

}  // namespace
