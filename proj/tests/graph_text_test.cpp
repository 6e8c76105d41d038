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


#include <random>

#include <gtest/gtest.h>

#include "pathalg/families.hpp"
#include "pathalg/graph_text.hpp"
#include "pathalg/random_graph.hpp"

namespace pathalg {
namespace {

TEST(ParseGraphTest, SingleLoop) {
  const Graph g = parse_graph("vertex v\nedge v v");
  ASSERT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(*g.multiplicity(0, 0), Multiplicity::finite(1));
}

TEST(ParseGraphTest, BreakingFixture) {
  const Graph g = parse_graph("vertex v\nvertex w\nedge v w xinf\nedge v v");
  ASSERT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_group_count(), 2u);
  EXPECT_EQ(*g.multiplicity(0, 1), Multiplicity::omega());
  EXPECT_EQ(*g.multiplicity(0, 0), Multiplicity::finite(1));
}

TEST(ParseGraphTest, CommentsBlankLinesAndRepeatedEdges) {
  const Graph g = parse_graph(
      "# header\n\nformat 1\nvertex a   # trailing\n\tvertex b\r\nedge a b x2\nedge a b\n");
  EXPECT_EQ(*g.multiplicity(0, 1), Multiplicity::finite(3));
}

int error_line(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return static_cast<int>(e.line());
  }
  return -1;
}

TEST(ParseGraphTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("edge v w"), 1);
  EXPECT_EQ(error_line("vertex v\nedge v v x0"), 2);
  EXPECT_EQ(error_line("vertex v\nvertex v"), 2);
  EXPECT_EQ(error_line("vertex v\n\nedge v v x"), 3);
  EXPECT_EQ(error_line("vertex v\nedge v v xz"), 2);
  EXPECT_EQ(error_line("format 2"), 1);
  EXPECT_EQ(error_line("node v"), 1);
  EXPECT_EQ(error_line("vertex a b"), 1);
  EXPECT_EQ(error_line("vertex v\nedge v"), 2);
}

TEST(SerializeGraphTest, Format) {
  Graph g;
  g.add_vertex("v");
  g.add_vertex("w");
  g.add_edge(0, 1, Multiplicity::omega());
  g.add_edge(0, 0);
  g.add_edge(1, 1, Multiplicity::finite(4));
  EXPECT_EQ(serialize_graph(g),
            "format 1\nvertex v\nvertex w\nedge v v\nedge v w xinf\nedge w w x4\n");
}

TEST(SerializeGraphTest, FamilyTruncationsRoundTrip) {
  for (auto k : {FamilyKind::E_A, FamilyKind::E_L, FamilyKind::E_K, FamilyKind::E_P}) {
    for (std::uint64_t n = 1; n <= 4; ++n) {
      const Graph g = generate_finite({k, CardinalSpec::finite(n)});
      const auto text = serialize_graph(g);
      EXPECT_EQ(parse_graph(text), g);
      EXPECT_EQ(serialize_graph(parse_graph(text)), text);
    }
  }
  for (std::uint64_t n = 1; n <= 6; ++n) {
    const Graph g = generate_finite({FamilyKind::E_kappa, OrdinalSpec::finite(n)});
    EXPECT_EQ(parse_graph(serialize_graph(g)), g);
  }
}

TEST(SerializeGraphTest, RandomGraphsRoundTrip) {
  std::mt19937_64 rng(501);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(rng);
    EXPECT_EQ(parse_graph(serialize_graph(g)), g);
  }
}

TEST(CanonicalFormTest, RelabelingInvariant) {
  const Graph a = parse_graph("vertex x\nvertex y\nedge x y xinf\nedge x x");
  const Graph b = parse_graph("vertex p\nvertex q\nedge q p xinf\nedge q q");
  EXPECT_EQ(canonical_serialization(a), canonical_serialization(b));
  EXPECT_TRUE(isomorphic(a, b));
  Graph big;
  for (int i = 0; i < 9; ++i) big.add_vertex("v" + std::to_string(i));
  EXPECT_THROW(canonical_serialization(big), CapExceeded);
}

}  // namespace
}  // namespace pathalg
