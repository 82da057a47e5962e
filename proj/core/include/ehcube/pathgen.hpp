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

#include <cstddef>
#include <span>
#include <vector>

#include "ehcube/topology.hpp"

namespace ehcube {

/// All rotations of a list of distinct classes; rotation j starts at entry j.
/// No two rotations share a proper initial segment. Throws DomainError on an
/// empty list or repeated entries.
std::vector<DimensionList> cyclic_permutations(const DimensionList& list);

/// The vertex reached from u by traversing each class of `classes` once, in
/// any order. Throws DomainError if the classes repeat, fall outside 0..n, or
/// include all of 0..k (then different orders reach different vertices).
Vertex list_endpoint(const EnhancedHypercube& g, Vertex u, std::span<const int> classes);

/// The walk from u determined by the list. Repeated classes are allowed.
VertexPath realize(const EnhancedHypercube& g, Vertex u, std::span<const int> list);

/// Short-target construction from the canonical source 0^n to
/// canonical_target(g, low, high): rotations of the base list plus one
/// detour list per unused class. Requires the route length
/// min(low+high, k-low+high+1) to be below the diameter; throws DomainError
/// otherwise.
std::vector<DimensionList> construct_short_case(const EnhancedHypercube& g, int low, int high);

/// Far-target construction (route length equal to the diameter, which forces
/// high == n-k and ceil(k/2) <= low <= floor(k/2)+1). Throws DomainError for
/// any other (low, high).
std::vector<DimensionList> construct_far_case(const EnhancedHypercube& g, int low, int high);

/// Dispatches to the short or far construction. Always n+1 lists.
std::vector<DimensionList> construct_lists(const EnhancedHypercube& g, int low, int high);

struct Route {
  VertexPath vertices;
  DimensionList dims;

  std::size_t length() const { return dims.size(); }
  friend bool operator==(const Route&, const Route&) = default;
};

/// Promised by a PathSet: every route has length <= bound_all and at least
/// count_short routes have length <= bound_short.
struct Guarantee {
  int count_short = 0;
  int bound_short = 0;
  int bound_all = 0;

  friend bool operator==(Guarantee, Guarantee) = default;
};

struct PathSet {
  Vertex source;
  Vertex target;
  std::vector<Route> routes;
  Guarantee guarantee;

  std::vector<std::size_t> lengths() const;
};

/// Up to n+1 internally disjoint source-target routes. All n+1 are built,
/// sorted by (length, vertex sequence) and the first `count` are kept.
/// Throws DomainError if source == target or count is outside [1, n+1].
PathSet disjoint_paths(const EnhancedHypercube& g, Vertex source, Vertex target, int count);

}  // namespace ehcube
