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


#include <algorithm>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "pathalg/graph.hpp"
#include "pathalg/graph_text.hpp"
#include "pathalg/vertex_set.hpp"

namespace pathalg {
namespace {

TEST(GraphTest, AddVertexAssignsContiguousIndices) {
  Graph g;
  EXPECT_EQ(add_vertex(g, "v"), (VertexId{"v", 0}));
  EXPECT_EQ(add_vertex(g, "w"), (VertexId{"w", 1}));
  EXPECT_THROW(add_vertex(g, "v"), GraphError);
}

TEST(GraphTest, RejectsUnusableLabels) {
  Graph g;
  EXPECT_THROW(g.add_vertex(""), GraphError);
  EXPECT_THROW(g.add_vertex("a b"), GraphError);
  EXPECT_THROW(g.add_vertex("a#"), GraphError);
}

TEST(GraphTest, ParallelEdgesMergeAdditively) {
  Graph g;
  auto v = g.add_vertex("v");
  add_edge(g, v, v, Multiplicity::finite(1));
  add_edge(g, v, v, Multiplicity::finite(1));
  ASSERT_EQ(g.edge_group_count(), 1u);
  EXPECT_EQ(*g.multiplicity(0, 0), Multiplicity::finite(2));
}

TEST(GraphTest, OmegaAbsorbs) {
  Graph g;
  auto v = g.add_vertex("v");
  auto w = g.add_vertex("w");
  add_edge(g, v, w, Multiplicity::omega());
  add_edge(g, v, w, Multiplicity::finite(3));
  EXPECT_EQ(*g.multiplicity(0, 1), Multiplicity::omega());
}

TEST(GraphTest, EdgeToAbsentVertexFails) {
  Graph g;
  auto v = g.add_vertex("v");
  EXPECT_THROW(add_edge(g, v, VertexId{"z", 1}), GraphError);
  EXPECT_THROW(g.add_edge(v, VertexId{"w", 0}), GraphError);
  EXPECT_THROW(g.add_edge("v", "z"), GraphError);
}

TEST(MultiplicityTest, ZeroIsNotAMultiplicity) {
  EXPECT_THROW(Multiplicity::finite(0), GraphError);
  EXPECT_EQ(Multiplicity::finite(2) + Multiplicity::finite(5), Multiplicity::finite(7));
  EXPECT_EQ(Multiplicity::omega().to_string(), "omega");
}

TEST(VertexClassTest, Examples) {
  Graph g;
  auto v = g.add_vertex("v");
  auto s = g.add_vertex("s");
  auto e = g.add_vertex("e");
  g.add_edge(v, v);
  g.add_edge(e, s, Multiplicity::omega());
  EXPECT_EQ(vertex_class(g, s), VertexClass::sink);
  EXPECT_EQ(vertex_class(g, v), VertexClass::regular);
  EXPECT_EQ(vertex_class(g, e), VertexClass::infinite_emitter);
  EXPECT_TRUE(is_singular(g, 1));
  EXPECT_TRUE(is_singular(g, 2));
  EXPECT_TRUE(is_regular(g, 0));
}

Graph random_multigraph(std::mt19937_64& rng, std::size_t n) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> kind(0, 3);
  for (int i = 0; i < 12; ++i) {
    const int k = kind(rng);
    g.add_edge(pick(rng), pick(rng),
               k == 3 ? Multiplicity::omega() : Multiplicity::finite(k + 1));
  }
  return g;
}

TEST(GraphPropertyTest, EveryVertexHasExactlyOneClass) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_multigraph(rng, 5);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const auto total = g.out_multiplicity(v);
      const bool regular = total && total->is_finite();
      EXPECT_EQ(is_regular(g, v), regular);
      EXPECT_EQ(vertex_class(g, v) == VertexClass::sink, !total.has_value());
    }
  }
}

TEST(GraphPropertyTest, EdgeInsertionOrderDoesNotMatter) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_multigraph(rng, 4);
    // Split each group into unit pieces, shuffle, and rebuild.
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, Multiplicity>> pieces;
    for (const auto& e : g.edges()) {
      const auto key = std::pair{e.source.index, e.target.index};
      if (e.multiplicity.is_omega()) {
        pieces.push_back({key, Multiplicity::omega()});
        pieces.push_back({key, Multiplicity::finite(1)});
      } else {
        for (std::uint64_t i = 0; i < e.multiplicity.count(); ++i) {
          pieces.push_back({key, Multiplicity::finite(1)});
        }
      }
    }
    std::shuffle(pieces.begin(), pieces.end(), rng);
    Graph h;
    for (const auto& v : g.vertices()) h.add_vertex(v.label);
    for (const auto& [key, m] : pieces) h.add_edge(key.first, key.second, m);
    EXPECT_EQ(g, h);
  }
}

TEST(GraphPropertyTest, IsomorphicCopiesHaveEqualCanonicalForm) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_multigraph(rng, 5);
    std::vector<std::size_t> perm(g.vertex_count());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h;
    for (std::size_t i = 0; i < perm.size(); ++i) h.add_vertex("u" + std::to_string(i));
    for (const auto& e : g.edges()) {
      h.add_edge(perm[e.source.index], perm[e.target.index], e.multiplicity);
    }
    EXPECT_TRUE(isomorphic(g, h));
    EXPECT_EQ(canonical_serialization(g), canonical_serialization(h));
  }
}

TEST(GraphPropertyTest, CanonicalFormSeparatesNonIsomorphicGraphs) {
  Graph a, b;
  for (auto* g : {&a, &b}) {
    g->add_vertex("x");
    g->add_vertex("y");
  }
  a.add_edge(0, 1);
  b.add_edge(0, 1, Multiplicity::finite(2));
  EXPECT_FALSE(isomorphic(a, b));
  b = Graph();
  b.add_vertex("x");
  b.add_vertex("y");
  b.add_edge(0, 0);
  EXPECT_FALSE(isomorphic(a, b));
}

TEST(VertexSetTest, SetAlgebra) {
  VertexSet a(4, {0, 1}), b(4, {1, 2});
  EXPECT_EQ(a | b, VertexSet(4, {0, 1, 2}));
  EXPECT_EQ(a & b, VertexSet(4, {1}));
  EXPECT_EQ(a - b, VertexSet(4, {0}));
  EXPECT_EQ(a.complement(), VertexSet(4, {2, 3}));
  EXPECT_TRUE(VertexSet(4, {1}).is_subset_of(a));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_EQ(a.size(), 2u);
  EXPECT_THROW((void)(a | VertexSet(3)), GraphError);
  EXPECT_THROW(a.insert(4), GraphError);
}

TEST(VertexSetTest, OrderedBySizeThenMembers) {
  std::vector<VertexSet> sets = {VertexSet(3, {0, 1}), VertexSet(3, {2}), VertexSet(3),
                                 VertexSet(3, {0})};
  std::sort(sets.begin(), sets.end());
  EXPECT_EQ(sets[0], VertexSet(3));
  EXPECT_EQ(sets[1], VertexSet(3, {0}));
  EXPECT_EQ(sets[2], VertexSet(3, {2}));
  EXPECT_EQ(sets[3], VertexSet(3, {0, 1}));
}

}  // namespace
}  // namespace pathalg
