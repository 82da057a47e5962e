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

#include "ehcube/symmetry.hpp"

#include <string>

#include "ehcube/error.hpp"

namespace ehcube {

Automorphism::Automorphism(const EnhancedHypercube& g)
    : n_(g.n()), mask_{}, image_(static_cast<std::size_t>(g.n()) + 1),
      preimage_(static_cast<std::size_t>(g.n()) + 1) {
  for (int p = 0; p <= n_; ++p) image_[p] = preimage_[p] = p;
}

Automorphism::Automorphism(const EnhancedHypercube& g, Vertex mask,
                           std::span<const int> perm_low, std::span<const int> perm_high)
    : Automorphism(g) {
  g.check(mask);
  mask_ = mask;
  const int k = g.k();
  if (perm_low.size() != static_cast<std::size_t>(k) ||
      perm_high.size() != static_cast<std::size_t>(n_ - k)) {
    throw DomainError("automorphism: block permutations must have sizes k and n-k");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
  auto assign = [&](int position, int target, int first, int last) {
    if (target < first || target > last || seen[target]) {
      throw DomainError("automorphism: position " + std::to_string(position) +
                        " cannot map to " + std::to_string(target));
    }
    seen[target] = true;
    image_[position] = target;
    preimage_[target] = position;
  };
  for (int p = 1; p <= k; ++p) assign(p, perm_low[p - 1], 1, k);
  for (int p = k + 1; p <= n_; ++p) assign(p, perm_high[p - k - 1], k + 1, n_);
}

Vertex Automorphism::permute(Vertex x, const std::vector<int>& table) const {
  std::uint64_t out = 0;
  for (int p = 1; p <= n_; ++p) {
    if (x.test(p)) out |= std::uint64_t{1} << (table[p] - 1);
  }
  return Vertex{out};
}

Vertex Automorphism::apply(Vertex x) const { return permute(Vertex{x.bits ^ mask_.bits}, image_); }

Vertex Automorphism::apply_inverse(Vertex y) const {
  return Vertex{permute(y, preimage_).bits ^ mask_.bits};
}

Normalization normalize_pair(const EnhancedHypercube& g, Vertex u, Vertex v) {
  g.check(u);
  g.check(v);
  if (u == v) throw DomainError("normalize_pair: degenerate pair, u == v");

  const std::uint64_t diff = u.bits ^ v.bits;
  const int k = g.k();
  const int n = g.n();

  // Differing positions first, agreeing positions after, each ascending.
  auto block_perm = [&](int first, int last, int& differing) {
    std::vector<int> perm(static_cast<std::size_t>(last - first + 1));
    differing = 0;
    for (int p = first; p <= last; ++p) differing += static_cast<int>((diff >> (p - 1)) & 1U);
    int next_diff = first;
    int next_same = first + differing;
    for (int p = first; p <= last; ++p) {
      perm[p - first] = ((diff >> (p - 1)) & 1U) ? next_diff++ : next_same++;
    }
    return perm;
  };

  int low = 0;
  int high = 0;
  const std::vector<int> perm_low = block_perm(1, k, low);
  const std::vector<int> perm_high = block_perm(k + 1, n, high);
  return {Automorphism(g, u, perm_low, perm_high), low, high};
}

Vertex canonical_target(const EnhancedHypercube& g, int low, int high) {
  if (low < 0 || low > g.k() || high < 0 || high > g.n() - g.k()) {
    throw DomainError("canonical_target: need 0 <= low <= k and 0 <= high <= n-k");
  }
  const std::uint64_t low_bits = (std::uint64_t{1} << low) - 1;
  const std::uint64_t high_bits = ((std::uint64_t{1} << high) - 1) << g.k();
  return Vertex{low_bits | high_bits};
}

VertexPath map_path_back(const EnhancedHypercube& g, const Automorphism& sigma,
                         std::span<const Vertex> path) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.edge_class(path[i], path[i + 1])) {
      throw DomainError("map_path_back: malformed path, step " + std::to_string(i) +
                        " joins non-adjacent vertices");
    }
  }
  VertexPath out;
  out.reserve(path.size());
  for (Vertex x : path) out.push_back(sigma.apply_inverse(x));
  return out;
}

}  // namespace ehcube
