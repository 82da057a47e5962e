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

#pragma once

#include "ehcube/topology.hpp"

namespace ehcube {

/// Differing positions between two labels, split at position k.
struct HammingSplit {
  int low = 0;   // among positions 1..k
  int high = 0;  // among positions k+1..n

  friend bool operator==(HammingSplit, HammingSplit) = default;
};

HammingSplit hamming_split(const EnhancedHypercube& g, Vertex u, Vertex v);

/// Closed-form hop distance: high + min(low, k - low + 1).
int distance(const EnhancedHypercube& g, Vertex u, Vertex v);

/// n - floor(k/2).
int diameter(const EnhancedHypercube& g);

/// Smallest fault count at which the fault and wide diameters exceed the
/// plain diameter: n - floor(k/2).
int robustness_breakpoint(const EnhancedHypercube& g);

/// Predicted value of both the (omega-1)-fault diameter and the omega-wide
/// diameter: the diameter below the breakpoint, the diameter plus one from
/// it up to omega = n+1. Throws DomainError for omega outside [1, n+1].
int predicted_robust_diameter(const EnhancedHypercube& g, int omega);

/// A deterministic shortest route from u to v. Uses the Hamming route when
/// it is no longer than the complementary route; otherwise a single class-0
/// edge first, then the agreeing low positions. High positions come last.
/// All positions are emitted in ascending order. Throws DomainError if u == v.
DimensionList shortest_path(const EnhancedHypercube& g, Vertex u, Vertex v);

}  // namespace ehcube
