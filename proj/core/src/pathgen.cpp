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

#include "ehcube/pathgen.hpp"

#include <algorithm>
#include <string>

#include "ehcube/error.hpp"
#include "ehcube/metric.hpp"
#include "ehcube/symmetry.hpp"

namespace ehcube {

namespace {

DimensionList iota_list(int first, int last) {
  DimensionList out;
  for (int d = first; d <= last; ++d) out.push_back(d);
  return out;
}

DimensionList concat(std::initializer_list<DimensionList> parts) {
  DimensionList out;
  for (const DimensionList& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

void check_canonical(const EnhancedHypercube& g, int low, int high) {
  if (low < 0 || low > g.k() || high < 0 || high > g.n() - g.k()) {
    throw DomainError("canonical target needs 0 <= low <= k and 0 <= high <= n-k, got low=" +
                      std::to_string(low) + " high=" + std::to_string(high));
  }
  if (low == 0 && high == 0) throw DomainError("canonical target equals the source");
}

int route_length(const EnhancedHypercube& g, int low, int high) {
  return std::min(low + high, g.k() - low + high + 1);
}

}  // namespace

std::vector<DimensionList> cyclic_permutations(const DimensionList& list) {
  if (list.empty()) throw DomainError("cyclic_permutations: empty list");
  DimensionList sorted = list;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("cyclic_permutations: entries must be distinct");
  }
  std::vector<DimensionList> out;
  out.reserve(list.size());
  for (std::size_t start = 0; start < list.size(); ++start) {
    DimensionList rotation(list.begin() + static_cast<std::ptrdiff_t>(start), list.end());
    rotation.insert(rotation.end(), list.begin(), list.begin() + static_cast<std::ptrdiff_t>(start));
    out.push_back(std::move(rotation));
  }
  return out;
}

Vertex list_endpoint(const EnhancedHypercube& g, Vertex u, std::span<const int> classes) {
  g.check(u);
  std::vector<bool> present(static_cast<std::size_t>(g.n()) + 1, false);
  for (int d : classes) {
    if (d < 0 || d > g.n()) throw DomainError("list_endpoint: class out of range");
    if (present[d]) throw DomainError("list_endpoint: repeated class " + std::to_string(d));
    present[d] = true;
  }
  bool covers_low_block = true;
  for (int d = 0; d <= g.k(); ++d) covers_low_block = covers_low_block && present[d];
  if (covers_low_block) {
    throw DomainError("list_endpoint: classes contain all of 0..k, endpoint depends on order");
  }
  std::uint64_t flips = 0;
  for (int d : classes) {
    if (d != kComplementClass) flips |= std::uint64_t{1} << (d - 1);
  }
  if (present[kComplementClass]) flips ^= g.low_mask();
  return Vertex{u.bits ^ flips};
}

VertexPath realize(const EnhancedHypercube& g, Vertex u, std::span<const int> list) {
  VertexPath path;
  path.reserve(list.size() + 1);
  path.push_back(u);
  for (int d : list) path.push_back(g.apply_dimension(path.back(), d));
  return path;
}

std::vector<DimensionList> construct_short_case(const EnhancedHypercube& g, int low, int high) {
  check_canonical(g, low, high);
  const int k = g.k();
  const int r = route_length(g, low, high);
  if (r >= diameter(g)) {
    throw DomainError("short-case construction needs route length " + std::to_string(r) +
                      " below the diameter " + std::to_string(diameter(g)));
  }

  const DimensionList high_run = iota_list(k + 1, k + high);
  const bool hamming = low <= k - low;
  const DimensionList base = hamming ? concat({iota_list(1, low), high_run})
                                     : concat({{kComplementClass}, iota_list(low + 1, k), high_run});

  std::vector<DimensionList> lists = cyclic_permutations(base);

  std::vector<bool> used(static_cast<std::size_t>(g.n()) + 1, false);
  for (int d : base) used[d] = true;
  for (int h = 0; h <= g.n(); ++h) {
    if (used[h]) continue;
    // The detour h.base.h collides with its neighbour detour when the low
    // block leaves only one free position: for k = 2 with one differing low
    // position (detours 0 and 2), and for the complement route with two
    // differing low positions (detours 1 and 2). Those pairs become
    // single-pass orders of a set that avoids part of 0..k.
    if (hamming && k == 2 && low == 1 && (h == kComplementClass || h == 2)) {
      const int other = h == 2 ? kComplementClass : 2;
      lists.push_back(concat({{h}, high_run, {other}}));
    } else if (!hamming && low == 2 && (h == 1 || h == 2)) {
      lists.push_back(concat({{h}, high_run, {3 - h}}));
    } else {
      lists.push_back(concat({{h}, base, {h}}));
    }
  }
  return lists;
}

std::vector<DimensionList> construct_far_case(const EnhancedHypercube& g, int low, int high) {
  check_canonical(g, low, high);
  const int k = g.k();
  const int n = g.n();
  const int lower = (k + 1) / 2;
  const int upper = k / 2 + 1;
  if (high != n - k || low < lower || low > upper) {
    throw DomainError("far-case construction needs high == n-k and ceil(k/2) <= low <= floor(k/2)+1");
  }

  const DimensionList high_run = iota_list(k + 1, n);
  // For odd k both tables describe the same low; the Hamming form wins.
  const bool hamming = low == lower;
  const DimensionList base = hamming ? concat({iota_list(1, low), high_run})
                                     : concat({{kComplementClass}, iota_list(low + 1, k), high_run});
  const DimensionList rest = hamming ? concat({{kComplementClass}, iota_list(low + 1, k)})
                                     : iota_list(1, low);

  std::vector<DimensionList> lists = cyclic_permutations(base);
  for (const DimensionList& rotation : cyclic_permutations(rest)) {
    DimensionList list{rotation.front()};
    list.insert(list.end(), high_run.begin(), high_run.end());
    list.insert(list.end(), rotation.begin() + 1, rotation.end());
    lists.push_back(std::move(list));
  }
  return lists;
}

std::vector<DimensionList> construct_lists(const EnhancedHypercube& g, int low, int high) {
  check_canonical(g, low, high);
  return route_length(g, low, high) < diameter(g) ? construct_short_case(g, low, high)
                                                  : construct_far_case(g, low, high);
}

std::vector<std::size_t> PathSet::lengths() const {
  std::vector<std::size_t> out;
  out.reserve(routes.size());
  for (const Route& route : routes) out.push_back(route.length());
  return out;
}

PathSet disjoint_paths(const EnhancedHypercube& g, Vertex source, Vertex target, int count) {
  if (count < 1 || count > g.n() + 1) {
    throw DomainError("path count must satisfy 1 <= count <= n+1 = " + std::to_string(g.n() + 1));
  }
  const Normalization norm = normalize_pair(g, source, target);
  const Vertex origin{0};

  std::vector<Route> routes;
  for (const DimensionList& list : construct_lists(g, norm.low, norm.high)) {
    Route route;
    route.vertices = map_path_back(g, norm.sigma, realize(g, origin, list));
    route.dims.reserve(list.size());
    for (std::size_t i = 0; i + 1 < route.vertices.size(); ++i) {
      route.dims.push_back(*g.edge_class(route.vertices[i], route.vertices[i + 1]));
    }
    routes.push_back(std::move(route));
  }
  std::sort(routes.begin(), routes.end(), [](const Route& a, const Route& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
  });
  routes.resize(static_cast<std::size_t>(count));

  PathSet out{source, target, std::move(routes), {}};
  out.guarantee.bound_short = diameter(g);
  out.guarantee.bound_all = diameter(g) + 1;
  out.guarantee.count_short = static_cast<int>(
      std::count_if(out.routes.begin(), out.routes.end(), [&](const Route& route) {
        return route.length() <= static_cast<std::size_t>(out.guarantee.bound_short);
      }));
  return out;
}

}  // namespace ehcube
