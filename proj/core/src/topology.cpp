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

#include "ehcube/topology.hpp"

#include <bit>
#include <string>

#include "ehcube/error.hpp"

namespace ehcube {

namespace {

std::uint64_t ones(int count) {
  return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

}  // namespace

EnhancedHypercube::EnhancedHypercube(int n, int k) : n_(n), k_(k) {
  if (n == 2 && k == 2) {
    throw DomainError(
        "Q_{2,2} is the complete graph K_4, where fault and wide diameters "
        "differ; n must be at least 3");
  }
  if (n < 3 || n > kMaxDimension) {
    throw DomainError("n must satisfy 3 <= n <= " + std::to_string(kMaxDimension) +
                      ", got " + std::to_string(n));
  }
  if (k < 2 || k > n) {
    throw DomainError("k must satisfy 2 <= k <= n, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
  low_mask_ = ones(k);
  full_mask_ = ones(n);
}

void EnhancedHypercube::check(Vertex u) const {
  if (!contains(u)) {
    throw DomainError("vertex " + std::to_string(u.bits) + " has bits above position " +
                      std::to_string(n_));
  }
}

Vertex EnhancedHypercube::apply_dimension(Vertex u, int d) const {
  check(u);
  if (d < 0 || d > n_) {
    throw DomainError("edge class " + std::to_string(d) + " outside 0.." + std::to_string(n_));
  }
  if (d == kComplementClass) return Vertex{u.bits ^ low_mask_};
  return Vertex{u.bits ^ (std::uint64_t{1} << (d - 1))};
}

std::vector<Neighbor> EnhancedHypercube::neighbors(Vertex u) const {
  check(u);
  std::vector<Neighbor> out;
  out.reserve(static_cast<std::size_t>(n_) + 1);
  for (int d = 1; d <= n_; ++d) {
    out.push_back({d, Vertex{u.bits ^ (std::uint64_t{1} << (d - 1))}});
  }
  out.push_back({kComplementClass, Vertex{u.bits ^ low_mask_}});
  return out;
}

std::optional<int> EnhancedHypercube::edge_class(Vertex u, Vertex v) const {
  check(u);
  check(v);
  const std::uint64_t diff = u.bits ^ v.bits;
  if (diff == 0) return std::nullopt;
  if (diff == low_mask_) return kComplementClass;
  if (std::has_single_bit(diff)) return std::countr_zero(diff) + 1;
  return std::nullopt;
}

std::string EnhancedHypercube::format(Vertex u) const {
  check(u);
  std::string text(static_cast<std::size_t>(n_), '0');
  for (int p = 1; p <= n_; ++p) {
    if (u.test(p)) text[static_cast<std::size_t>(n_ - p)] = '1';
  }
  return text;
}

Vertex EnhancedHypercube::parse(std::string_view text) const {
  if (text.size() != static_cast<std::size_t>(n_)) {
    throw DomainError("vertex \"" + std::string(text) + "\" must have exactly " +
                      std::to_string(n_) + " characters");
  }
  std::uint64_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw DomainError("vertex \"" + std::string(text) + "\" may only contain '0' and '1'");
    }
    bits = (bits << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return Vertex{bits};
}

}  // namespace ehcube
