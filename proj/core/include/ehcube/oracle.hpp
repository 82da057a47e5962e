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
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ehcube/pathgen.hpp"
#include "ehcube/topology.hpp"

// Brute-force ground truth for Q_{n,k}. Nothing here uses the closed-form
// metric; distances come from breadth-first search over neighbors().

namespace ehcube {

enum class FaultKind { kVertex, kEdge };

const char* to_string(FaultKind kind);

/// Undirected edge, stored with a < b.
struct Edge {
  Vertex a;
  Vertex b;

  static Edge make(Vertex x, Vertex y) { return x < y ? Edge{x, y} : Edge{y, x}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Size limits and parallelism for the exhaustive searches.
struct OracleConfig {
  static constexpr int kDefaultCap = 5;
  static constexpr int kHardCap = 6;
  static constexpr const char* kCapEnvVar = "EHCUBE_ORACLE_CAP";

  int cap = kDefaultCap;
  unsigned workers = 1;

  /// Default config with the cap taken from EHCUBE_ORACLE_CAP when set.
  static OracleConfig from_environment();

  /// Throws ResourceError when g.n() exceeds min(cap, kHardCap).
  void require_within_cap(const EnhancedHypercube& g, const char* what) const;
};

inline constexpr unsigned kUnreachable = std::numeric_limits<unsigned>::max();

/// Hop distance in g minus the deleted vertices, or nullopt if disconnected.
/// Throws DomainError if an endpoint is deleted.
std::optional<unsigned> bfs_distance(const EnhancedHypercube& g, Vertex u, Vertex v,
                                     std::span<const Vertex> deleted = {});

/// Hop distance in g minus the deleted edges.
std::optional<unsigned> bfs_distance(const EnhancedHypercube& g, Vertex u, Vertex v,
                                     std::span<const Edge> deleted);

/// BFS distances from u to every vertex, indexed by label. Throws
/// ResourceError above 2^20 vertices.
std::vector<unsigned> bfs_distances_from(const EnhancedHypercube& g, Vertex u);

/// Largest pairwise BFS distance over all sources.
unsigned bfs_diameter(const EnhancedHypercube& g);

struct FaultDiameterReport {
  int omega = 1;
  FaultKind kind = FaultKind::kVertex;
  /// Worst diameter over all fault sets of size omega-1; kUnreachable if any
  /// fault set disconnects the graph.
  unsigned worst_value = 0;
  std::vector<Vertex> witness_vertices;  // kVertex
  std::vector<Edge> witness_edges;       // kEdge
  Vertex witness_u;
  Vertex witness_v;
  std::uint64_t sets_examined = 0;
  std::uint64_t disconnected_sets = 0;
};

/// Exhaustive (omega-1)-fault diameter over every fault set of size exactly
/// omega-1. The witness is the lexicographically first fault set attaining
/// the maximum and, within it, the lexicographically least farthest pair, so
/// the report does not depend on config.workers.
FaultDiameterReport fault_diameter_exact(const EnhancedHypercube& g, int omega, FaultKind kind,
                                         const OracleConfig& config = {});

/// Worst faulted diameter for every fault-set size 0..omega-1 (index = size).
std::vector<unsigned> fault_diameter_by_size(const EnhancedHypercube& g, int omega,
                                             FaultKind kind, const OracleConfig& config = {});

/// A pair and a fault set forcing distance diameter+1 once
/// n - floor(k/2) - 1 vertices are deleted.
struct LowerBoundWitness {
  Vertex u;
  Vertex v;
  std::vector<Vertex> faults;
};

LowerBoundWitness lower_bound_witness(const EnhancedHypercube& g);

enum class WideMethod { kExactSearch, kSandwich };

const char* to_string(WideMethod method);

struct WideDiameterReport {
  int omega = 1;
  unsigned value = 0;
  WideMethod method = WideMethod::kExactSearch;
  unsigned lower = 0;
  unsigned upper = 0;
  bool exact = false;
};

/// Largest vertex count for which the exact wide-diameter search runs.
inline constexpr std::uint64_t kWideExactMaxVertices = 16;

/// Least l such that u and v are joined by `omega` internally disjoint paths
/// of length <= l, by enumerating simple paths and exact set packing.
unsigned min_wide_length(const EnhancedHypercube& g, Vertex u, Vertex v, int omega);

/// Exact omega-wide diameter by per-pair search. Throws ResourceError above
/// kWideExactMaxVertices.
WideDiameterReport wide_diameter_search(const EnhancedHypercube& g, int omega);

/// Bounds the omega-wide diameter between `lower` (a fault diameter) and the
/// constructor's worst omega-th route length.
WideDiameterReport wide_diameter_sandwich(const EnhancedHypercube& g, int omega, unsigned lower);

/// Exact search on small graphs, sandwich with the vertex-fault diameter as
/// lower bound otherwise.
WideDiameterReport wide_diameter_exact(const EnhancedHypercube& g, int omega,
                                       const OracleConfig& config = {});

/// Maximum number of internally disjoint u,v-paths (vertex-split unit
/// capacity max flow). u and v must be distinct and non-adjacent.
int max_disjoint_paths(const EnhancedHypercube& g, Vertex u, Vertex v);

/// Vertex connectivity: the minimum of max_disjoint_paths over non-adjacent
/// pairs.
int connectivity_exact(const EnhancedHypercube& g, const OracleConfig& config = {});

enum class ViolationKind {
  kEmptyPath,
  kBadEndpoint,
  kNotAdjacent,
  kDimsMismatch,
  kNotSimple,
  kSharedVertex,
  kSharedEdge,
  kTooLong,
  kTooFewShort,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::size_t first = 0;   // path index
  std::size_t second = 0;  // other path index for pairwise violations, else == first
  std::string message;
};

struct Certificate {
  bool ok = true;
  std::vector<Violation> violations;  // at most one: the first found
  std::string summary;
};

/// Checks routes, endpoints, pairwise internal vertex and edge disjointness,
/// and the recorded guarantee. Violations are returned, not thrown.
Certificate verify_path_set(const EnhancedHypercube& g, const PathSet& paths);

}  // namespace ehcube
