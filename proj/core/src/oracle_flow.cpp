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

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "ehcube/error.hpp"
#include "ehcube/oracle.hpp"

namespace ehcube {

namespace {

// Unit-capacity network in which every vertex x is split into an entry node
// 2x and an exit node 2x+1 joined by an arc of capacity one.
class SplitNetwork {
 public:
  SplitNetwork(const EnhancedHypercube& g, Vertex source, Vertex sink)
      : nodes_(2 * g.vertex_count()), capacity_(nodes_ * nodes_, 0) {
    constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;
    for (std::uint64_t x = 0; x < g.vertex_count(); ++x) {
      const bool terminal = x == source.bits || x == sink.bits;
      arc(2 * x, 2 * x + 1) = terminal ? kUnbounded : 1;
      for (const Neighbor& nb : g.neighbors(Vertex{x})) arc(2 * x + 1, 2 * nb.vertex.bits) = 1;
    }
  }

  int max_flow(std::size_t from, std::size_t to) {
    int flow = 0;
    std::vector<std::size_t> parent(nodes_);
    for (;;) {
      std::fill(parent.begin(), parent.end(), nodes_);
      parent[from] = from;
      std::vector<std::size_t> queue{from};
      for (std::size_t head = 0; head < queue.size() && parent[to] == nodes_; ++head) {
        const std::size_t x = queue[head];
        for (std::size_t y = 0; y < nodes_; ++y) {
          if (parent[y] == nodes_ && arc(x, y) > 0) {
            parent[y] = x;
            queue.push_back(y);
          }
        }
      }
      if (parent[to] == nodes_) return flow;
      for (std::size_t y = to; y != from; y = parent[y]) {
        --arc(parent[y], y);
        ++arc(y, parent[y]);
      }
      ++flow;
    }
  }

 private:
  int& arc(std::size_t x, std::size_t y) { return capacity_[x * nodes_ + y]; }

  std::size_t nodes_;
  std::vector<int> capacity_;
};

}  // namespace

int max_disjoint_paths(const EnhancedHypercube& g, Vertex u, Vertex v) {
  g.check(u);
  g.check(v);
  if (g.vertex_count() > 64) throw ResourceError("max_disjoint_paths: more than 64 vertices");
  if (u == v || g.edge_class(u, v)) {
    throw DomainError("max_disjoint_paths: endpoints must be distinct and non-adjacent");
  }
  SplitNetwork network(g, u, v);
  return network.max_flow(2 * u.bits + 1, 2 * v.bits);
}

int connectivity_exact(const EnhancedHypercube& g, const OracleConfig& config) {
  config.require_within_cap(g, "connectivity_exact");
  int best = static_cast<int>(g.vertex_count()) - 1;
  for (std::uint64_t x = 0; x < g.vertex_count(); ++x) {
    for (std::uint64_t y = x + 1; y < g.vertex_count(); ++y) {
      if (g.edge_class(Vertex{x}, Vertex{y})) continue;
      best = std::min(best, max_disjoint_paths(g, Vertex{x}, Vertex{y}));
    }
  }
  return best;
}

}  // namespace ehcube
