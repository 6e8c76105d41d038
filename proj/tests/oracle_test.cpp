// Copyright 2026 The pathalg Authors
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


// The brute-force oracles are the ground truth for every randomized test, so
// they are first pinned against small graphs whose answers were worked out by
// hand.

#include <gtest/gtest.h>

#include "pathalg/graph_text.hpp"
#include "pathalg/oracle.hpp"

namespace pathalg {
namespace {

TEST(OracleTest, ReachMatrixOnChain) {
  const Graph g = parse_graph("vertex a\nvertex b\nvertex c\nedge a b\nedge b c");
  const auto r = oracle::reach_matrix(g);
  EXPECT_TRUE(r[0][2]);
  EXPECT_TRUE(r[1][1]);
  EXPECT_FALSE(r[2][0]);
  EXPECT_FALSE(r[1][0]);
  EXPECT_EQ(oracle::descendants(g, 1), VertexSet(3, {1, 2}));
  EXPECT_EQ(oracle::ancestors(g, 1), VertexSet(3, {0, 1}));
}

TEST(OracleTest, SaturatedFamilyOfArrow) {
  const Graph g = parse_graph("vertex a\nvertex b\nedge a b");
  const auto fam = oracle::saturated_hereditary_family(g);
  EXPECT_EQ(fam, (std::vector<VertexSet>{VertexSet(2), VertexSet(2, {0, 1})}));
  EXPECT_EQ(oracle::least_saturated_hereditary_superset(g, VertexSet(2, {1})),
            VertexSet(2, {0, 1}));
}

TEST(OracleTest, InfiniteEmitterIsNotSaturatedIn) {
  const Graph g = parse_graph("vertex v\nvertex w\nedge v w xinf");
  EXPECT_FALSE(oracle::is_regular(g, 0));
  EXPECT_TRUE(oracle::is_saturated(g, VertexSet(2, {1})));
}

TEST(OracleTest, SimpleCycleCounts) {
  EXPECT_EQ(oracle::simple_cycle_count(parse_graph("vertex v\nedge v v"), 0), 1u);
  EXPECT_EQ(oracle::simple_cycle_count(parse_graph("vertex v\nedge v v x2"), 0), 2u);
  EXPECT_EQ(oracle::simple_cycle_count(parse_graph("vertex v\nedge v v xinf"), 0), 2u);
  EXPECT_EQ(oracle::simple_cycle_count(parse_graph("vertex v\nvertex w\nedge v w"), 0), 0u);
  // a -> b -> c -> a and a -> c. From a: a-b-c-a and a-c-a. From b the
  // interior may wind around a <-> c any number of times.
  const Graph g = parse_graph(
      "vertex a\nvertex b\nvertex c\nedge a b\nedge b c\nedge c a\nedge a c");
  EXPECT_EQ(oracle::simple_cycle_count(g, 0), 2u);
  EXPECT_EQ(oracle::simple_cycle_count(g, 1), 2u);
  EXPECT_EQ(oracle::simple_cycle_count(g, 2), 2u);
  // A plain triangle bases exactly one cycle at each vertex.
  const Graph t = parse_graph("vertex a\nvertex b\nvertex c\nedge a b\nedge b c\nedge c a");
  for (std::size_t v = 0; v < 3; ++v) EXPECT_EQ(oracle::simple_cycle_count(t, v), 1u);
}

TEST(OracleTest, ExitlessCycles) {
  EXPECT_TRUE(oracle::has_exitless_cycle(parse_graph("vertex v\nedge v v")));
  EXPECT_FALSE(oracle::has_exitless_cycle(parse_graph("vertex v\nedge v v x2")));
  EXPECT_TRUE(oracle::has_exitless_cycle(
      parse_graph("vertex s\nvertex a\nvertex b\nedge s a\nedge s s\nedge a b\nedge b a")));
  EXPECT_FALSE(oracle::has_exitless_cycle(
      parse_graph("vertex a\nvertex b\nvertex s\nedge a b\nedge b a\nedge b s")));
}

TEST(OracleTest, DirectednessAndCofinality) {
  const Graph sinks = parse_graph("vertex a\nvertex b\nvertex c\nedge a b\nedge a c");
  EXPECT_FALSE(oracle::is_downward_directed(sinks));
  EXPECT_FALSE(oracle::is_cofinal(sinks));
  const Graph funnel = parse_graph("vertex a\nvertex b\nvertex c\nedge a c\nedge b c");
  EXPECT_TRUE(oracle::is_downward_directed(funnel));
  EXPECT_TRUE(oracle::is_cofinal(funnel));
  // The sink s cannot reach the cycle a <-> b.
  const Graph escape = parse_graph("vertex a\nvertex b\nvertex s\nedge a b\nedge b a\nedge b s");
  EXPECT_TRUE(oracle::is_downward_directed(escape));
  EXPECT_FALSE(oracle::is_cofinal(escape));
}

}  // namespace
}  // namespace pathalg
