// Copyright 2026 The hechordal Authors
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
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "hechordal/graph.hpp"
#include "test_support.hpp"

namespace hechordal {
namespace {

using testing::graph_from_code;

TEST(GraphFromEdges, TriangleAndFig1a) {
  const Graph k3 = graph_from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(k3, complete_graph(3));
  EXPECT_EQ(k3.edge_count(), 3u);

  const Graph fig1a = graph_from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
  EXPECT_EQ(fig1a, builtin_graph("fig1a"));
  for (Vertex u = 0; u < 5; ++u) {
    EXPECT_FALSE(fig1a.adjacent(u, u));
    for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(fig1a.adjacent(u, v), fig1a.adjacent(v, u));
  }
}

TEST(GraphFromEdges, RejectsSelfLoopAndOutOfRange) {
  EXPECT_THROW(graph_from_edges(2, {{0, 0}}), GraphError);
  EXPECT_THROW(graph_from_edges(2, {{0, 2}}), GraphError);
}

TEST(GraphFromEdges, CollapsesDuplicates) {
  const Graph g = graph_from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(GraphIo, ParsesPathAndEmpty) {
  EXPECT_EQ(parse_graph("3\n0 1\n1 2\n"), path_graph(3));
  const Graph empty = parse_graph("0\n");
  EXPECT_EQ(empty.size(), 0u);
}

TEST(GraphIo, CanonicalFormatOfFig1b) {
  EXPECT_EQ(format_graph(builtin_graph("fig1b")), "5\n0 1\n0 2\n1 3\n2 3\n2 4\n3 4\n");
}

TEST(GraphIo, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph(""), GraphError);
  EXPECT_THROW(parse_graph("3 4\n"), GraphError);
  EXPECT_THROW(parse_graph("x\n"), GraphError);
  EXPECT_THROW(parse_graph("3\n0 a\n"), GraphError);
  EXPECT_THROW(parse_graph("3\n0 3\n"), GraphError);
  EXPECT_THROW(parse_graph("3\n1 1\n"), GraphError);
  EXPECT_THROW(parse_graph("3\n0 1\n0 1\n"), GraphError);
  EXPECT_THROW(parse_graph("3\n0 1 2\n"), GraphError);
  EXPECT_THROW(parse_graph("3\n2 1\n"), GraphError);
}

TEST(GraphIo, ToleratesBlankLinesAndCarriageReturns) {
  EXPECT_EQ(parse_graph("3\r\n\r\n0 1\r\n\n1 2"), path_graph(3));
}

TEST(GraphIo, RoundTripOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = gen_gnp(seed % 20, 0.4, seed);
    EXPECT_EQ(parse_graph(format_graph(g)), g) << "seed " << seed;
  }
}

TEST(Degree, Fig3AndSimpleCases) {
  const Graph fig3 = builtin_graph("fig3");
  EXPECT_EQ(degree(fig3, 1), 4u);
  EXPECT_EQ(neighbors(fig3, 1), (std::vector<Vertex>{0, 2, 3, 4}));

  const Graph isolated(3);
  EXPECT_EQ(degree(isolated, 1), 0u);
  EXPECT_TRUE(neighbors(isolated, 1).empty());

  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(degree(complete_graph(4), v), 3u);
  EXPECT_THROW(degree(fig3, 7), GraphError);
}

TEST(IsSimplicial, BuiltinExamples) {
  EXPECT_TRUE(is_simplicial(builtin_graph("fig1a"), 0));
  EXPECT_TRUE(is_simplicial(builtin_graph("fig1a"), 4));
  EXPECT_TRUE(is_simplicial(builtin_graph("fig1b"), 4));
  for (Vertex v = 0; v < 4; ++v) EXPECT_FALSE(is_simplicial(cycle_graph(4), v));
  EXPECT_TRUE(is_simplicial(Graph(1), 0));
  EXPECT_TRUE(is_simplicial(path_graph(2), 0));
  EXPECT_THROW(is_simplicial(path_graph(2), 2), GraphError);
}

TEST(IsSimplicial, InvariantUnderRelabeling) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const Graph g = gen_gnp(n, 0.5, trial);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = g.permuted(perm);
    for (Vertex v = 0; v < n; ++v) EXPECT_EQ(is_simplicial(g, v), is_simplicial(h, perm[v]));
  }
}

TEST(Eliminate, BuiltinGraphs) {
  const auto a = eliminate(builtin_graph("fig1a"));
  EXPECT_TRUE(a.is_chordal);
  EXPECT_TRUE(is_perfect_elimination_ordering(builtin_graph("fig1a"), a.order));

  const auto b = eliminate(builtin_graph("fig1b"));
  EXPECT_FALSE(b.is_chordal);
  EXPECT_EQ(b.order, std::vector<Vertex>{4});

  const auto empty = eliminate(Graph(0));
  EXPECT_TRUE(empty.is_chordal);
  EXPECT_TRUE(empty.order.empty());
}

TEST(Eliminate, BatchOrderIsAscendingWithinPass) {
  // Pass 1 removes {3, 4, 6} (v4, v5, v7), pass 2 {0, 1, 5}, pass 3 {2}.
  const auto r = eliminate(builtin_graph("fig3"));
  EXPECT_TRUE(r.is_chordal);
  EXPECT_EQ(r.order, (std::vector<Vertex>{3, 4, 6, 0, 1, 5, 2}));
}

TEST(ChordFreeCycle, SmallCases) {
  EXPECT_TRUE(chord_free_cycle_exists(cycle_graph(4)));
  EXPECT_FALSE(chord_free_cycle_exists(builtin_graph("fig1a")));
  EXPECT_TRUE(chord_free_cycle_exists(builtin_graph("fig1b")));
  EXPECT_FALSE(chord_free_cycle_exists(complete_graph(5)));
  EXPECT_THROW(chord_free_cycle_exists(path_graph(13)), GraphError);
}

TEST(Mcs, Fig3AndCycle) {
  EXPECT_TRUE(mcs_peo(builtin_graph("fig3")).is_chordal);
  EXPECT_FALSE(mcs_peo(cycle_graph(5)).is_chordal);
  EXPECT_TRUE(mcs_peo(Graph(0)).is_chordal);
}

// Every labeled graph on up to 6 vertices: the three oracles agree, and a
// positive elimination verdict carries a verifiable ordering.
TEST(Oracles, ExhaustiveAgreementUpToSixVertices) {
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto pairs = static_cast<std::uint32_t>(n > 0 ? n * (n - 1) / 2 : 0);
    for (std::uint32_t code = 0; code < (1u << pairs); ++code) {
      const Graph g = graph_from_code(n, code);
      const auto elim = eliminate(g);
      ASSERT_EQ(elim.is_chordal, !chord_free_cycle_exists(g)) << "n=" << n << " code=" << code;
      ASSERT_EQ(elim.is_chordal, mcs_peo(g).is_chordal) << "n=" << n << " code=" << code;
      ASSERT_EQ(elim.is_chordal, eliminate_one_at_a_time(g).is_chordal);
      if (elim.is_chordal) {
        ASSERT_EQ(elim.order.size(), n);
        ASSERT_TRUE(is_perfect_elimination_ordering(g, elim.order));
      }
    }
  }
}

TEST(Oracles, RandomAgreementAtTwelveVertices) {
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const Graph g = gen_gnp(12, 0.3, seed);
    ASSERT_EQ(eliminate(g).is_chordal, mcs_peo(g).is_chordal) << "seed " << seed;
  }
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = gen_gnp(12, 0.3, seed);
    ASSERT_EQ(eliminate(g).is_chordal, !chord_free_cycle_exists(g)) << "seed " << seed;
  }
}

TEST(Generators, ChordalGeneratorIsChordal) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = gen_chordal(1 + seed % 40, seed);
    EXPECT_TRUE(eliminate(g).is_chordal) << "seed " << seed;
  }
}

TEST(Generators, GnpEdgeCasesAndDeterminism) {
  EXPECT_EQ(gen_gnp(6, 0.0, 3).edge_count(), 0u);
  EXPECT_EQ(gen_gnp(6, 1.0, 3), complete_graph(6));
  EXPECT_EQ(gen_gnp(20, 0.3, 11), gen_gnp(20, 0.3, 11));
  EXPECT_NE(gen_gnp(20, 0.3, 11), gen_gnp(20, 0.3, 12));
  EXPECT_THROW(gen_gnp(4, 1.5, 0), GraphError);
  EXPECT_THROW(gen_gnp(4, -0.1, 0), GraphError);
}

TEST(Generators, BuiltinNames) {
  EXPECT_EQ(builtin_graph("fig3").size(), 7u);
  EXPECT_EQ(builtin_graph("fig3").edge_count(), 9u);
  EXPECT_EQ(builtin_graph("path-8"), path_graph(8));
  EXPECT_EQ(builtin_graph("cycle-5"), cycle_graph(5));
  EXPECT_EQ(builtin_graph("complete-4"), complete_graph(4));
  EXPECT_THROW(builtin_graph("petersen"), GraphError);
  EXPECT_THROW(builtin_graph("cycle-2"), GraphError);
  EXPECT_THROW(builtin_graph("path-"), GraphError);
}

}  // namespace
}  // namespace hechordal
