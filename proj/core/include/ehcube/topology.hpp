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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ehcube {

/// An n-bit vertex label. Position p (1-based) is bit p-1, so position 1 is
/// the least significant bit.
struct Vertex {
  std::uint64_t bits = 0;

  constexpr bool test(int position) const { return (bits >> (position - 1)) & 1U; }
  friend constexpr auto operator<=>(Vertex, Vertex) = default;
};

/// Edge class 0 is the k-complementary edge; classes 1..n flip one position.
inline constexpr int kComplementClass = 0;

/// A walk encoded as the sequence of edge classes it traverses.
using DimensionList = std::vector<int>;
using VertexPath = std::vector<Vertex>;

struct Neighbor {
  int edge_class = 0;
  Vertex vertex;
};

/// The enhanced hypercube Q_{n,k}: the hypercube on n-bit labels plus an
/// edge from every vertex to the vertex with its low k positions complemented.
///
/// The graph is implicit; every query is O(1) or O(n). Supported parameters
/// are 3 <= n <= 62 and 2 <= k <= n.
class EnhancedHypercube {
 public:
  static constexpr int kMaxDimension = 62;

  /// Throws DomainError outside the supported range. Q_{2,2} is K_4 and is
  /// rejected with an explanation.
  EnhancedHypercube(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::uint64_t vertex_count() const { return std::uint64_t{1} << n_; }
  int degree() const { return n_ + 1; }

  /// Bits of positions 1..k.
  std::uint64_t low_mask() const { return low_mask_; }
  /// Bits of positions k+1..n.
  std::uint64_t high_mask() const { return full_mask_ & ~low_mask_; }
  std::uint64_t full_mask() const { return full_mask_; }

  bool contains(Vertex u) const { return (u.bits & ~full_mask_) == 0; }
  /// Throws DomainError if u has bits above position n.
  void check(Vertex u) const;

  /// Follows the unique edge of class d at u. Involution in u.
  Vertex apply_dimension(Vertex u, int d) const;

  /// All n+1 neighbours, ordered by edge class 1..n and then class 0.
  std::vector<Neighbor> neighbors(Vertex u) const;

  /// The class of edge uv, or nullopt when u and v are not adjacent.
  std::optional<int> edge_class(Vertex u, Vertex v) const;

  /// Text form x_n...x_1: most significant position first.
  std::string format(Vertex u) const;
  /// Inverse of format; requires exactly n characters of '0'/'1'.
  Vertex parse(std::string_view text) const;

  friend bool operator==(const EnhancedHypercube&, const EnhancedHypercube&) = default;

 private:
  int n_;
  int k_;
  std::uint64_t low_mask_;
  std::uint64_t full_mask_;
};

}  // namespace ehcube
