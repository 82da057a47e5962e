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

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <numeric>

#include "ehcube/error.hpp"
#include "ehcube/metric.hpp"
#include "test_support.hpp"

namespace ehcube {
namespace {

Automorphism random_automorphism(const EnhancedHypercube& g) {
  auto& rng = testing::rng();
  std::vector<int> low(static_cast<std::size_t>(g.k()));
  std::vector<int> high(static_cast<std::size_t>(g.n() - g.k()));
  std::iota(low.begin(), low.end(), 1);
  std::iota(high.begin(), high.end(), g.k() + 1);
  std::shuffle(low.begin(), low.end(), rng);
  std::shuffle(high.begin(), high.end(), rng);
  return Automorphism(g, Vertex{rng() & g.full_mask()}, low, high);
}

TEST(Symmetry, NormalizePairExamples) {
  const EnhancedHypercube q43(4, 3);
  const Normalization a = normalize_pair(q43, q43.parse("0110"), q43.parse("0000"));
  EXPECT_EQ(a.sigma.mask(), q43.parse("0110"));
  EXPECT_EQ(a.low, 2);
  EXPECT_EQ(a.high, 0);
  EXPECT_EQ(q43.format(a.sigma.apply(q43.parse("0000"))), "0011");
  EXPECT_EQ(a.sigma.apply(q43.parse("0110")), Vertex{0});

  const EnhancedHypercube q53(5, 3);
  const Normalization b = normalize_pair(q53, q53.parse("00000"), q53.parse("01101"));
  EXPECT_EQ(b.low, 2);
  EXPECT_EQ(b.high, 1);
  EXPECT_EQ(q53.format(b.sigma.apply(q53.parse("01101"))), "01011");

  const Normalization c = normalize_pair(q53, Vertex{0}, q53.parse("01011"));
  EXPECT_EQ(c.sigma.mask(), Vertex{0});
  for (int p = 0; p <= 5; ++p) EXPECT_EQ(c.sigma.image(p), p);

  EXPECT_THROW(normalize_pair(q53, Vertex{4}, Vertex{4}), DomainError);
}

TEST(Symmetry, NormalizedTargetIsContiguous) {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 2; k <= n; ++k) {
      const EnhancedHypercube g(n, k);
      for (std::uint64_t x = 0; x < g.vertex_count(); ++x) {
        for (std::uint64_t y = 0; y < g.vertex_count(); ++y) {
          if (x == y) continue;
          const Normalization norm = normalize_pair(g, Vertex{x}, Vertex{y});
          const HammingSplit split = hamming_split(g, Vertex{x}, Vertex{y});
          EXPECT_EQ(norm.low, split.low);
          EXPECT_EQ(norm.high, split.high);
          EXPECT_EQ(norm.sigma.apply(Vertex{x}), Vertex{0});
          EXPECT_EQ(norm.sigma.apply(Vertex{y}), canonical_target(g, norm.low, norm.high));
        }
      }
    }
  }
}

TEST(Symmetry, GeneratorsAreAutomorphismsAndPreserveClassZero) {
  for (int n = 3; n <= 5; ++n) {
    for (int k = 2; k <= n; ++k) {
      const EnhancedHypercube g(n, k);
      for (int trial = 0; trial < 10; ++trial) {
        const Automorphism sigma = random_automorphism(g);
        for (std::uint64_t x = 0; x < g.vertex_count(); ++x) {
          for (const Neighbor& nb : g.neighbors(Vertex{x})) {
            const auto cls = g.edge_class(sigma.apply(Vertex{x}), sigma.apply(nb.vertex));
            ASSERT_TRUE(cls.has_value());
            EXPECT_EQ(*cls, sigma.image(nb.edge_class));
          }
        }
      }
    }
  }
}

TEST(Symmetry, TranslationCommutesWithComplement) {
  auto& rng = testing::rng();
  const EnhancedHypercube g(9, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t mask = rng() & g.full_mask();
    const Vertex x{rng() & g.full_mask()};
    EXPECT_EQ(Vertex{g.apply_dimension(x, 0).bits ^ mask}, g.apply_dimension(Vertex{x.bits ^ mask}, 0));
  }
}

TEST(Symmetry, InverseRoundTrip) {
  const EnhancedHypercube g(12, 5);
  auto& rng = testing::rng();
  const Automorphism identity(g);
  for (int trial = 0; trial < 50; ++trial) {
    const Automorphism sigma = random_automorphism(g);
    const Vertex x{rng() & g.full_mask()};
    EXPECT_EQ(sigma.apply_inverse(sigma.apply(x)), x);
    EXPECT_EQ(sigma.apply(sigma.apply_inverse(x)), x);
    EXPECT_EQ(identity.apply(x), x);
    const Automorphism shift(g, x, std::vector<int>{1, 2, 3, 4, 5},
                             std::vector<int>{6, 7, 8, 9, 10, 11, 12});
    EXPECT_EQ(shift.apply(x), Vertex{0});
  }
}

TEST(Symmetry, RejectsCrossBlockPermutation) {
  const EnhancedHypercube g(4, 2);
  EXPECT_THROW(Automorphism(g, Vertex{0}, std::vector<int>{1, 3}, std::vector<int>{2, 4}),
               DomainError);
  EXPECT_THROW(Automorphism(g, Vertex{0}, std::vector<int>{1, 1}, std::vector<int>{3, 4}),
               DomainError);
}

TEST(Symmetry, MapPathBack) {
  const EnhancedHypercube g(4, 3);
  const Automorphism identity(g);
  const VertexPath path{Vertex{0}, Vertex{1}, Vertex{3}};
  EXPECT_EQ(map_path_back(g, identity, path), path);

  const Automorphism shift(g, Vertex{0b1010}, std::vector<int>{1, 2, 3}, std::vector<int>{4});
  EXPECT_EQ(map_path_back(g, shift, VertexPath{Vertex{0}, Vertex{1}}),
            (VertexPath{Vertex{0b1010}, Vertex{0b1011}}));

  EXPECT_THROW(map_path_back(g, identity, VertexPath{Vertex{0}, Vertex{3}}), DomainError);
}

}  // namespace
}  // namespace ehcube
