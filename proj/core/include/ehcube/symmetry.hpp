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

#include <span>
#include <vector>

#include "ehcube/topology.hpp"

namespace ehcube {

/// x -> P(x XOR mask), where P permutes positions 1..k among themselves and
/// positions k+1..n among themselves. Every such map is an automorphism of
/// Q_{n,k}; class 0 maps to class 0 and class d to class image(d).
class Automorphism {
 public:
  /// Identity on g.
  explicit Automorphism(const EnhancedHypercube& g);

  /// perm_low[p-1] is the image of position p for p in 1..k; perm_high[p-k-1]
  /// is the image of position p for p in k+1..n. Throws DomainError unless
  /// both are permutations of their block.
  Automorphism(const EnhancedHypercube& g, Vertex mask, std::span<const int> perm_low,
               std::span<const int> perm_high);

  Vertex mask() const { return mask_; }
  /// Image of a position, or of an edge class (class 0 is fixed).
  int image(int position) const { return image_[position]; }
  int preimage(int position) const { return preimage_[position]; }

  Vertex apply(Vertex x) const;
  Vertex apply_inverse(Vertex y) const;

 private:
  Vertex permute(Vertex x, const std::vector<int>& table) const;

  int n_;
  Vertex mask_;
  std::vector<int> image_;     // index 0..n, image_[0] == 0
  std::vector<int> preimage_;  // inverse of image_
};

/// Result of reducing a pair to the canonical frame: sigma(u) = 0^n and
/// sigma(v) has ones exactly at positions 1..low and k+1..k+high.
struct Normalization {
  Automorphism sigma;
  int low = 0;
  int high = 0;
};

/// Throws DomainError if u == v. The mask is u; differing positions are
/// relabelled to the front of their block in ascending order, agreeing
/// positions follow, also ascending.
Normalization normalize_pair(const EnhancedHypercube& g, Vertex u, Vertex v);

/// 0^{n-k-high} 1^{high} 0^{k-low} 1^{low}.
Vertex canonical_target(const EnhancedHypercube& g, int low, int high);

/// Pulls a path in the canonical frame back to the original labels. Throws
/// DomainError when two consecutive vertices are not adjacent.
VertexPath map_path_back(const EnhancedHypercube& g, const Automorphism& sigma,
                         std::span<const Vertex> path);

}  // namespace ehcube
