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
#include <map>
#include <set>
#include <string>

#include "ehcube/oracle.hpp"

namespace ehcube {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEmptyPath: return "empty-path";
    case ViolationKind::kBadEndpoint: return "bad-endpoint";
    case ViolationKind::kNotAdjacent: return "not-adjacent";
    case ViolationKind::kDimsMismatch: return "dims-mismatch";
    case ViolationKind::kNotSimple: return "not-simple";
    case ViolationKind::kSharedVertex: return "shared-vertex";
    case ViolationKind::kSharedEdge: return "shared-edge";
    case ViolationKind::kTooLong: return "length";
    case ViolationKind::kTooFewShort: return "too-few-short";
  }
  return "unknown";
}

namespace {

Certificate fail(ViolationKind kind, std::size_t first, std::size_t second, std::string message) {
  Certificate out;
  out.ok = false;
  out.violations.push_back({kind, first, second, message});
  out.summary = std::string(to_string(kind)) + ": " + message;
  return out;
}

std::string path_name(std::size_t index) { return "path " + std::to_string(index); }

}  // namespace

Certificate verify_path_set(const EnhancedHypercube& g, const PathSet& paths) {
  const auto& routes = paths.routes;
  for (std::size_t p = 0; p < routes.size(); ++p) {
    const VertexPath& vs = routes[p].vertices;
    if (vs.size() < 2) return fail(ViolationKind::kEmptyPath, p, p, path_name(p) + " has no edges");
    for (Vertex x : vs) {
      if (!g.contains(x)) {
        return fail(ViolationKind::kBadEndpoint, p, p, path_name(p) + " leaves the graph");
      }
    }
    if (vs.front() != paths.source || vs.back() != paths.target) {
      return fail(ViolationKind::kBadEndpoint, p, p,
                  path_name(p) + " runs " + g.format(vs.front()) + " -> " + g.format(vs.back()));
    }
    if (routes[p].dims.size() != vs.size() - 1) {
      return fail(ViolationKind::kDimsMismatch, p, p, path_name(p) + " dims length differs");
    }
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      const std::optional<int> cls = g.edge_class(vs[i], vs[i + 1]);
      if (!cls) {
        return fail(ViolationKind::kNotAdjacent, p, p,
                    path_name(p) + " step " + std::to_string(i) + " joins " + g.format(vs[i]) +
                        " and " + g.format(vs[i + 1]));
      }
      if (*cls != routes[p].dims[i]) {
        return fail(ViolationKind::kDimsMismatch, p, p,
                    path_name(p) + " step " + std::to_string(i) + " is class " +
                        std::to_string(*cls) + ", dims say " + std::to_string(routes[p].dims[i]));
      }
    }
    std::set<Vertex> seen(vs.begin(), vs.end());
    if (seen.size() != vs.size()) {
      return fail(ViolationKind::kNotSimple, p, p, path_name(p) + " repeats a vertex");
    }
  }

  std::map<Vertex, std::size_t> owner;
  std::map<Edge, std::size_t> edge_owner;
  for (std::size_t p = 0; p < routes.size(); ++p) {
    const VertexPath& vs = routes[p].vertices;
    for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
      auto [it, inserted] = owner.emplace(vs[i], p);
      if (!inserted) {
        return fail(ViolationKind::kSharedVertex, it->second, p,
                    path_name(it->second) + " and " + path_name(p) + " share " + g.format(vs[i]));
      }
    }
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      auto [it, inserted] = edge_owner.emplace(Edge::make(vs[i], vs[i + 1]), p);
      if (!inserted) {
        return fail(ViolationKind::kSharedEdge, it->second, p,
                    path_name(it->second) + " and " + path_name(p) + " share edge " +
                        g.format(vs[i]) + "-" + g.format(vs[i + 1]));
      }
    }
  }

  const Guarantee& promise = paths.guarantee;
  std::size_t short_count = 0;
  std::size_t longest = 0;
  for (std::size_t p = 0; p < routes.size(); ++p) {
    const std::size_t len = routes[p].length();
    if (len > static_cast<std::size_t>(promise.bound_all)) {
      return fail(ViolationKind::kTooLong, p, p,
                  path_name(p) + " has length " + std::to_string(len) + " > " +
                      std::to_string(promise.bound_all));
    }
    if (len <= static_cast<std::size_t>(promise.bound_short)) ++short_count;
    longest = std::max(longest, len);
  }
  if (short_count < static_cast<std::size_t>(std::max(promise.count_short, 0))) {
    return fail(ViolationKind::kTooFewShort, 0, 0,
                std::to_string(short_count) + " paths of length <= " +
                    std::to_string(promise.bound_short) + ", promised " +
                    std::to_string(promise.count_short));
  }

  Certificate out;
  out.summary = std::to_string(routes.size()) + " internally disjoint paths, longest " +
                std::to_string(longest) + ", " + std::to_string(short_count) +
                " of length <= " + std::to_string(promise.bound_short);
  return out;
}

}  // namespace ehcube
