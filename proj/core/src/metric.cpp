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

#include "ehcube/metric.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "ehcube/error.hpp"

namespace ehcube {

HammingSplit hamming_split(const EnhancedHypercube& g, Vertex u, Vertex v) {
  g.check(u);
  g.check(v);
  const std::uint64_t diff = u.bits ^ v.bits;
  return {std::popcount(diff & g.low_mask()), std::popcount(diff & g.high_mask())};
}

int distance(const EnhancedHypercube& g, Vertex u, Vertex v) {
  const HammingSplit split = hamming_split(g, u, v);
  return split.high + std::min(split.low, g.k() - split.low + 1);
}

int diameter(const EnhancedHypercube& g) { return g.n() - g.k() / 2; }

int robustness_breakpoint(const EnhancedHypercube& g) { return g.n() - g.k() / 2; }

int predicted_robust_diameter(const EnhancedHypercube& g, int omega) {
  if (omega < 1 || omega > g.n() + 1) {
    throw DomainError("omega must satisfy 1 <= omega <= n+1 = " + std::to_string(g.n() + 1));
  }
  return omega < robustness_breakpoint(g) ? diameter(g) : diameter(g) + 1;
}

DimensionList shortest_path(const EnhancedHypercube& g, Vertex u, Vertex v) {
  if (u == v) throw DomainError("shortest_path: endpoints coincide, the path is empty");
  const HammingSplit split = hamming_split(g, u, v);
  const std::uint64_t diff = u.bits ^ v.bits;

  DimensionList dims;
  dims.reserve(static_cast<std::size_t>(distance(g, u, v)));
  // Ties go to the Hamming route.
  const bool use_complement = split.low > g.k() - split.low + 1;
  if (use_complement) dims.push_back(kComplementClass);
  for (int p = 1; p <= g.k(); ++p) {
    const bool differs = (diff >> (p - 1)) & 1U;
    if (differs != use_complement) dims.push_back(p);
  }
  for (int p = g.k() + 1; p <= g.n(); ++p) {
    if ((diff >> (p - 1)) & 1U) dims.push_back(p);
  }
  return dims;
}

}  // namespace ehcube
