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

#include <gtest/gtest.h>

#include <set>

#include "ehcube/error.hpp"
#include "test_support.hpp"

namespace ehcube {
namespace {

TEST(Topology, RejectsOutOfRangeParameters) {
  EXPECT_THROW(EnhancedHypercube(2, 2), DomainError);
  EXPECT_THROW(EnhancedHypercube(3, 1), DomainError);
  EXPECT_THROW(EnhancedHypercube(3, 4), DomainError);
  EXPECT_THROW(EnhancedHypercube(63, 2), DomainError);
  EXPECT_NO_THROW(EnhancedHypercube(62, 62));
}

TEST(Topology, TwoTwoErrorExplainsCompleteGraph) {
  try {
    EnhancedHypercube(2, 2);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("K_4"), std::string::npos);
  }
}

TEST(Topology, ApplyDimensionWorkedExample) {
  const EnhancedHypercube g(5, 3);
  EXPECT_EQ(g.format(g.apply_dimension(g.parse("00000"), 2)), "00010");
  EXPECT_EQ(g.format(g.apply_dimension(g.parse("00010"), 0)), "00101");
  EXPECT_EQ(g.format(g.apply_dimension(g.parse("00101"), 5)), "10101");
}

TEST(Topology, ApplyDimensionErrors) {
  const EnhancedHypercube g(4, 3);
  EXPECT_THROW(g.apply_dimension(Vertex{0}, 5), DomainError);
  EXPECT_THROW(g.apply_dimension(Vertex{0}, -1), DomainError);
  EXPECT_THROW(g.apply_dimension(Vertex{16}, 1), DomainError);
}

TEST(Topology, ApplyDimensionIsAnInvolution) {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 2; k <= n; ++k) {
      const EnhancedHypercube g(n, k);
      for (std::uint64_t x = 0; x < g.vertex_count(); ++x) {
        for (int d = 0; d <= n; ++d) {
          EXPECT_EQ(g.apply_dimension(g.apply_dimension(Vertex{x}, d), d), Vertex{x});
        }
      }
    }
  }
}

TEST(Topology, NeighborsOfOriginInFigureGraphs) {
  const EnhancedHypercube q33(3, 3);
  std::set<std::string> seen;
  for (const Neighbor& nb : q33.neighbors(Vertex{0})) seen.insert(q33.format(nb.vertex));
  EXPECT_EQ(seen, (std::set<std::string>{"001", "010", "100", "111"}));

  const EnhancedHypercube q43(4, 3);
  bool has_curve = false;
  for (const Neighbor& nb : q43.neighbors(Vertex{0})) {
    has_curve = has_curve || (nb.edge_class == 4 && q43.format(nb.vertex) == "1000");
  }
  EXPECT_TRUE(has_curve);
}

TEST(Topology, NeighborsAreDistinctAndOnePerClass) {
  auto& rng = testing::rng();
  for (int n = 3; n <= 40; n += 3) {
    const EnhancedHypercube g(n, 2 + static_cast<int>(rng() % (n - 1)));
    for (int trial = 0; trial < 20; ++trial) {
      const Vertex u{rng() & g.full_mask()};
      const auto nbrs = g.neighbors(u);
      ASSERT_EQ(nbrs.size(), static_cast<std::size_t>(n + 1));
      std::set<Vertex> targets;
      std::set<int> classes;
      for (const Neighbor& nb : nbrs) {
        targets.insert(nb.vertex);
        classes.insert(nb.edge_class);
        EXPECT_EQ(nb.vertex, g.apply_dimension(u, nb.edge_class));
      }
      EXPECT_EQ(targets.size(), nbrs.size());
      EXPECT_EQ(classes.size(), nbrs.size());
      EXPECT_EQ(targets.count(u), 0U);
    }
  }
}

TEST(Topology, EdgeClassExamples) {
  const EnhancedHypercube q33(3, 3);
  EXPECT_EQ(q33.edge_class(q33.parse("000"), q33.parse("111")), 0);
  EXPECT_EQ(q33.edge_class(q33.parse("000"), q33.parse("011")), std::nullopt);
  EXPECT_EQ(q33.edge_class(q33.parse("000"), q33.parse("000")), std::nullopt);
  const EnhancedHypercube q43(4, 3);
  EXPECT_EQ(q43.edge_class(q43.parse("0000"), q43.parse("0111")), 0);
  EXPECT_EQ(q43.edge_class(q43.parse("0000"), q43.parse("1000")), 4);
}

TEST(Topology, EdgeSetEqualsCartesianProductOfCubeAndFoldedCube) {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 2; k <= n; ++k) {
      const EnhancedHypercube g(n, k);
      std::set<std::pair<std::uint64_t, std::uint64_t>> edges;
      for (std::uint64_t x = 0; x < g.vertex_count(); ++x) {
        for (const Neighbor& nb : g.neighbors(Vertex{x})) {
          edges.insert({std::min(x, nb.vertex.bits), std::max(x, nb.vertex.bits)});
        }
      }
      EXPECT_EQ(edges, testing::product_edges(n, k)) << "n=" << n << " k=" << k;
    }
  }
}

TEST(Topology, AdjacencyIsSymmetricAndIrreflexive) {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 2; k <= n; ++k) {
      const EnhancedHypercube g(n, k);
      for (std::uint64_t x = 0; x < g.vertex_count(); ++x) {
        EXPECT_FALSE(g.edge_class(Vertex{x}, Vertex{x}));
        for (std::uint64_t y = 0; y < g.vertex_count(); ++y) {
          const auto forward = g.edge_class(Vertex{x}, Vertex{y});
          EXPECT_EQ(forward, g.edge_class(Vertex{y}, Vertex{x}));
          if (forward) EXPECT_EQ(g.apply_dimension(Vertex{x}, *forward), Vertex{y});
        }
      }
    }
  }
}

TEST(Topology, FoldedCaseJoinsComplements) {
  const EnhancedHypercube g(5, 5);
  for (std::uint64_t x = 0; x < g.vertex_count(); ++x) {
    EXPECT_EQ(g.edge_class(Vertex{x}, Vertex{~x & g.full_mask()}), 0);
  }
}

TEST(Topology, TextFormatPutsPositionOneLast) {
  const EnhancedHypercube g(5, 3);
  EXPECT_EQ(g.parse("00010"), Vertex{0b10});
  EXPECT_EQ(g.format(Vertex{0b10101}), "10101");
  EXPECT_THROW(g.parse("0001"), DomainError);
  EXPECT_THROW(g.parse("000010"), DomainError);
  EXPECT_THROW(g.parse("00x10"), DomainError);
  auto& rng = testing::rng();
  const EnhancedHypercube big(62, 17);
  for (int i = 0; i < 100; ++i) {
    const Vertex u{rng() & big.full_mask()};
    EXPECT_EQ(big.parse(big.format(u)), u);
  }
}

}  // namespace
}  // namespace ehcube
