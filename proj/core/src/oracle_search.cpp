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
#include <atomic>
#include <bit>
#include <cstdlib>
#include <deque>
#include <functional>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "ehcube/error.hpp"
#include "ehcube/metric.hpp"
#include "ehcube/oracle.hpp"

namespace ehcube {

const char* to_string(FaultKind kind) { return kind == FaultKind::kVertex ? "vertex" : "edge"; }

const char* to_string(WideMethod method) {
  return method == WideMethod::kExactSearch ? "exact-search" : "sandwich";
}

OracleConfig OracleConfig::from_environment() {
  OracleConfig config;
  if (const char* text = std::getenv(kCapEnvVar); text != nullptr && *text != '\0') {
    char* end = nullptr;
    const long value = std::strtol(text, &end, 10);
    if (*end != '\0' || value < 3) {
      throw DomainError(std::string(kCapEnvVar) + " must be an integer >= 3, got \"" + text + "\"");
    }
    config.cap = static_cast<int>(std::min<long>(value, 64));
  }
  return config;
}

void OracleConfig::require_within_cap(const EnhancedHypercube& g, const char* what) const {
  const int limit = std::min(cap, kHardCap);
  if (g.n() > limit) {
    std::string message = std::string(what) + ": n=" + std::to_string(g.n()) +
                          " exceeds the oracle cap of " + std::to_string(limit);
    if (limit < kHardCap) {
      message += "; raise it with --cap or " + std::string(kCapEnvVar) + " (at most " +
                 std::to_string(kHardCap) + ")";
    } else {
      message += ", the hard limit for exhaustive enumeration";
    }
    throw ResourceError(message);
  }
}

namespace {

constexpr std::uint64_t kBfsVertexLimit = std::uint64_t{1} << 20;

std::optional<unsigned> bfs_impl(const EnhancedHypercube& g, Vertex u, Vertex v,
                                 const std::function<bool(Vertex, Vertex)>& blocked) {
  g.check(u);
  g.check(v);
  if (u == v) return 0U;
  std::unordered_map<std::uint64_t, unsigned> dist{{u.bits, 0U}};
  std::deque<Vertex> queue{u};
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    const unsigned next = dist[x.bits] + 1;
    for (const Neighbor& nb : g.neighbors(x)) {
      if (blocked(x, nb.vertex) || dist.contains(nb.vertex.bits)) continue;
      if (nb.vertex == v) return next;
      dist.emplace(nb.vertex.bits, next);
      queue.push_back(nb.vertex);
    }
  }
  return std::nullopt;
}

// Adjacency bitmasks for graphs of at most 64 vertices.
std::vector<std::uint64_t> adjacency_masks(const EnhancedHypercube& g) {
  std::vector<std::uint64_t> adj(g.vertex_count(), 0);
  for (std::uint64_t x = 0; x < g.vertex_count(); ++x) {
    for (const Neighbor& nb : g.neighbors(Vertex{x})) adj[x] |= std::uint64_t{1} << nb.vertex.bits;
  }
  return adj;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

// Lexicographic unranking of an r-subset of {0..n-1}.
std::vector<int> unrank_combination(std::uint64_t index, int n, int r) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(r));
  int x = 0;
  for (int pos = 0; pos < r; ++pos) {
    for (;; ++x) {
      const std::uint64_t below = binomial(static_cast<std::uint64_t>(n - x - 1),
                                           static_cast<std::uint64_t>(r - pos - 1));
      if (index < below) break;
      index -= below;
    }
    out.push_back(x++);
  }
  return out;
}

bool next_combination(std::vector<int>& combo, int n) {
  const int r = static_cast<int>(combo.size());
  int i = r - 1;
  while (i >= 0 && combo[i] == n - r + i) --i;
  if (i < 0) return false;
  ++combo[i];
  for (int j = i + 1; j < r; ++j) combo[j] = combo[j - 1] + 1;
  return true;
}

struct Eccentricity {
  unsigned value = 0;
  std::uint64_t u = 0;
  std::uint64_t v = 0;
};

// Diameter of the subgraph induced on `alive` by growing all balls at once.
// Returns kUnreachable if it is disconnected.
Eccentricity faulted_diameter(std::span<const std::uint64_t> adj, std::uint64_t alive,
                              std::vector<std::uint64_t>& reach, std::vector<std::uint64_t>& next) {
  const std::size_t count = adj.size();
  for (std::size_t x = 0; x < count; ++x) reach[x] = std::uint64_t{1} << x;
  unsigned radius = 0;
  for (;;) {
    std::uint64_t incomplete = 0;
    for (std::size_t x = 0; x < count; ++x) {
      if (((alive >> x) & 1U) && reach[x] != alive) incomplete |= std::uint64_t{1} << x;
    }
    if (incomplete == 0) return {radius, 0, 0};
    bool grew = false;
    for (std::size_t x = 0; x < count; ++x) {
      next[x] = reach[x];
      if (!((alive >> x) & 1U)) continue;
      for (std::uint64_t nbrs = adj[x] & alive; nbrs != 0; nbrs &= nbrs - 1) {
        next[x] |= reach[static_cast<std::size_t>(std::countr_zero(nbrs))];
      }
      grew = grew || next[x] != reach[x];
    }
    const auto u = static_cast<std::uint64_t>(std::countr_zero(incomplete));
    const auto v = static_cast<std::uint64_t>(std::countr_zero(alive & ~reach[u]));
    if (!grew) return {kUnreachable, u, v};
    reach.swap(next);
    ++radius;
    bool done = true;
    for (std::size_t x = 0; x < count && done; ++x) {
      done = !((alive >> x) & 1U) || reach[x] == alive;
    }
    if (done) return {radius, u, v};
  }
}

struct ChunkBest {
  Eccentricity ecc;
  std::vector<int> faults;
  std::uint64_t disconnected = 0;
  bool any = false;
};

}  // namespace

std::optional<unsigned> bfs_distance(const EnhancedHypercube& g, Vertex u, Vertex v,
                                     std::span<const Vertex> deleted) {
  std::unordered_set<std::uint64_t> gone;
  for (Vertex x : deleted) gone.insert(x.bits);
  if (gone.contains(u.bits) || gone.contains(v.bits)) {
    throw DomainError("bfs_distance: an endpoint is among the deleted vertices");
  }
  return bfs_impl(g, u, v, [&](Vertex, Vertex y) { return gone.contains(y.bits); });
}

std::optional<unsigned> bfs_distance(const EnhancedHypercube& g, Vertex u, Vertex v,
                                     std::span<const Edge> deleted) {
  std::vector<Edge> gone(deleted.begin(), deleted.end());
  for (Edge& e : gone) e = Edge::make(e.a, e.b);
  std::sort(gone.begin(), gone.end());
  return bfs_impl(g, u, v, [&](Vertex x, Vertex y) {
    return std::binary_search(gone.begin(), gone.end(), Edge::make(x, y));
  });
}

std::vector<unsigned> bfs_distances_from(const EnhancedHypercube& g, Vertex u) {
  g.check(u);
  if (g.vertex_count() > kBfsVertexLimit) {
    throw ResourceError("bfs_distances_from: more than 2^20 vertices");
  }
  std::vector<unsigned> dist(g.vertex_count(), kUnreachable);
  std::vector<std::uint64_t> queue{u.bits};
  queue.reserve(g.vertex_count());
  dist[u.bits] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint64_t x = queue[head];
    for (const Neighbor& nb : g.neighbors(Vertex{x})) {
      if (dist[nb.vertex.bits] != kUnreachable) continue;
      dist[nb.vertex.bits] = dist[x] + 1;
      queue.push_back(nb.vertex.bits);
    }
  }
  return dist;
}

unsigned bfs_diameter(const EnhancedHypercube& g) {
  unsigned out = 0;
  for (std::uint64_t x = 0; x < g.vertex_count(); ++x) {
    const std::vector<unsigned> dist = bfs_distances_from(g, Vertex{x});
    out = std::max(out, *std::max_element(dist.begin(), dist.end()));
  }
  return out;
}

FaultDiameterReport fault_diameter_exact(const EnhancedHypercube& g, int omega, FaultKind kind,
                                         const OracleConfig& config) {
  config.require_within_cap(g, "fault_diameter_exact");
  if (omega < 1 || omega > g.n() + 1) {
    throw DomainError("omega must satisfy 1 <= omega <= n+1 = " + std::to_string(g.n() + 1));
  }
  const std::vector<std::uint64_t> adj = adjacency_masks(g);
  const std::size_t count = adj.size();
  const std::uint64_t everyone = count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;

  std::vector<Edge> edges;
  if (kind == FaultKind::kEdge) {
    for (std::uint64_t x = 0; x < count; ++x) {
      for (std::uint64_t y = x + 1; y < count; ++y) {
        if ((adj[x] >> y) & 1U) edges.push_back({Vertex{x}, Vertex{y}});
      }
    }
  }
  const int items = kind == FaultKind::kVertex ? static_cast<int>(count)
                                               : static_cast<int>(edges.size());
  const int faults = omega - 1;
  const std::uint64_t total = binomial(static_cast<std::uint64_t>(items),
                                       static_cast<std::uint64_t>(faults));

  constexpr std::uint64_t kChunk = 2048;
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<ChunkBest> results(chunks);
  std::atomic<std::uint64_t> next_chunk{0};

  auto work = [&] {
    std::vector<std::uint64_t> reach(count);
    std::vector<std::uint64_t> scratch(count);
    std::vector<std::uint64_t> local_adj(adj);
    for (std::uint64_t c = next_chunk++; c < chunks; c = next_chunk++) {
      ChunkBest& best = results[c];
      const std::uint64_t first = c * kChunk;
      const std::uint64_t last = std::min(total, first + kChunk);
      std::vector<int> combo = unrank_combination(first, items, faults);
      for (std::uint64_t index = first; index < last; ++index) {
        std::uint64_t alive = everyone;
        Eccentricity ecc;
        if (kind == FaultKind::kVertex) {
          for (int x : combo) alive &= ~(std::uint64_t{1} << x);
          ecc = faulted_diameter(adj, alive, reach, scratch);
        } else {
          for (int e : combo) {
            const std::uint64_t a = edges[e].a.bits;
            const std::uint64_t b = edges[e].b.bits;
            local_adj[a] &= ~(std::uint64_t{1} << b);
            local_adj[b] &= ~(std::uint64_t{1} << a);
          }
          ecc = faulted_diameter(local_adj, alive, reach, scratch);
          for (int e : combo) {
            const std::uint64_t a = edges[e].a.bits;
            const std::uint64_t b = edges[e].b.bits;
            local_adj[a] = adj[a];
            local_adj[b] = adj[b];
          }
        }
        if (ecc.value == kUnreachable) ++best.disconnected;
        if (!best.any || ecc.value > best.ecc.value) {
          best.any = true;
          best.ecc = ecc;
          best.faults = combo;
        }
        next_combination(combo, items);
      }
    }
  };

  const unsigned workers = std::max(1U, config.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  FaultDiameterReport report;
  report.omega = omega;
  report.kind = kind;
  report.sets_examined = total;
  const ChunkBest* winner = nullptr;
  for (const ChunkBest& chunk : results) {
    report.disconnected_sets += chunk.disconnected;
    if (chunk.any && (winner == nullptr || chunk.ecc.value > winner->ecc.value)) winner = &chunk;
  }
  if (winner != nullptr) {
    report.worst_value = winner->ecc.value;
    report.witness_u = Vertex{winner->ecc.u};
    report.witness_v = Vertex{winner->ecc.v};
    for (int f : winner->faults) {
      if (kind == FaultKind::kVertex) {
        report.witness_vertices.push_back(Vertex{static_cast<std::uint64_t>(f)});
      } else {
        report.witness_edges.push_back(edges[f]);
      }
    }
  }
  return report;
}

std::vector<unsigned> fault_diameter_by_size(const EnhancedHypercube& g, int omega,
                                             FaultKind kind, const OracleConfig& config) {
  std::vector<unsigned> out;
  for (int size = 0; size < omega; ++size) {
    out.push_back(fault_diameter_exact(g, size + 1, kind, config).worst_value);
  }
  return out;
}

LowerBoundWitness lower_bound_witness(const EnhancedHypercube& g) {
  const int low = (g.k() + 1) / 2 - 1;
  std::uint64_t v = ((std::uint64_t{1} << low) - 1) | g.high_mask();
  LowerBoundWitness out{Vertex{0}, Vertex{v}, {}};
  for (std::uint64_t rest = v; rest != 0; rest &= rest - 1) {
    out.faults.push_back(Vertex{rest & (~rest + 1)});
  }
  return out;
}

namespace {

void collect_paths(std::span<const std::uint64_t> adj, std::uint64_t at, std::uint64_t target,
                   unsigned depth_left, std::uint64_t visited, std::uint64_t source_bit,
                   std::unordered_set<std::uint64_t>& internal_sets) {
  for (std::uint64_t nbrs = adj[at] & ~visited; nbrs != 0; nbrs &= nbrs - 1) {
    const auto next = static_cast<std::uint64_t>(std::countr_zero(nbrs));
    if (next == target) {
      internal_sets.insert(visited & ~source_bit);
      continue;
    }
    if (depth_left > 1) {
      collect_paths(adj, next, target, depth_left - 1, visited | (std::uint64_t{1} << next),
                    source_bit, internal_sets);
    }
  }
}

bool can_pack(const std::vector<std::uint64_t>& sets, std::size_t start, std::uint64_t used,
              int needed) {
  if (needed == 0) return true;
  for (std::size_t i = start; i < sets.size(); ++i) {
    if ((sets[i] & used) == 0 && can_pack(sets, i + 1, used | sets[i], needed - 1)) return true;
  }
  return false;
}

}  // namespace

unsigned min_wide_length(const EnhancedHypercube& g, Vertex u, Vertex v, int omega) {
  if (g.vertex_count() > 64) throw ResourceError("min_wide_length: more than 64 vertices");
  if (u == v) throw DomainError("min_wide_length: degenerate pair");
  const std::vector<std::uint64_t> adj = adjacency_masks(g);
  const unsigned start = *bfs_distance(g, u, v);
  for (unsigned limit = start; limit < g.vertex_count(); ++limit) {
    std::unordered_set<std::uint64_t> internal_sets;
    const std::uint64_t source_bit = std::uint64_t{1} << u.bits;
    collect_paths(adj, u.bits, v.bits, limit, source_bit, source_bit, internal_sets);
    std::vector<std::uint64_t> sets(internal_sets.begin(), internal_sets.end());
    std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
      const int pa = std::popcount(a);
      const int pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    if (can_pack(sets, 0, 0, omega)) return limit;
  }
  throw DomainError("min_wide_length: fewer than omega disjoint paths exist");
}

WideDiameterReport wide_diameter_search(const EnhancedHypercube& g, int omega) {
  if (g.vertex_count() > kWideExactMaxVertices) {
    throw ResourceError("wide_diameter_search: exact search is limited to " +
                        std::to_string(kWideExactMaxVertices) + " vertices");
  }
  if (omega < 1 || omega > g.n() + 1) {
    throw DomainError("omega must satisfy 1 <= omega <= n+1 = " + std::to_string(g.n() + 1));
  }
  unsigned worst = 0;
  for (std::uint64_t x = 0; x < g.vertex_count(); ++x) {
    for (std::uint64_t y = x + 1; y < g.vertex_count(); ++y) {
      worst = std::max(worst, min_wide_length(g, Vertex{x}, Vertex{y}, omega));
    }
  }
  return {omega, worst, WideMethod::kExactSearch, worst, worst, true};
}

WideDiameterReport wide_diameter_sandwich(const EnhancedHypercube& g, int omega, unsigned lower) {
  if (g.vertex_count() > 64) throw ResourceError("wide_diameter_sandwich: more than 64 vertices");
  unsigned upper = 0;
  for (std::uint64_t x = 0; x < g.vertex_count() && upper != kUnreachable; ++x) {
    for (std::uint64_t y = 0; y < g.vertex_count(); ++y) {
      if (x == y) continue;
      const PathSet paths = disjoint_paths(g, Vertex{x}, Vertex{y}, omega);
      if (!verify_path_set(g, paths).ok) {
        upper = kUnreachable;
        break;
      }
      upper = std::max(upper, static_cast<unsigned>(paths.routes.back().length()));
    }
  }
  WideDiameterReport report{omega, upper, WideMethod::kSandwich, lower, upper, lower == upper};
  return report;
}

WideDiameterReport wide_diameter_exact(const EnhancedHypercube& g, int omega,
                                       const OracleConfig& config) {
  if (g.vertex_count() <= kWideExactMaxVertices) return wide_diameter_search(g, omega);
  const unsigned lower = fault_diameter_exact(g, omega, FaultKind::kVertex, config).worst_value;
  return wide_diameter_sandwich(g, omega, lower);
}

}  // namespace ehcube
