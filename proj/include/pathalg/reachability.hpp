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

// Path reachability (v >= w), strongly connected components, downward
// directedness, cofinality and the countable separation property.
//
// Multiplicities play no role here: an edge group of any multiplicity is a
// single adjacency.

#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathalg/graph.hpp"
#include "pathalg/vertex_set.hpp"

namespace pathalg {

/// H(v): every w with a path from v to w, v included.
inline VertexSet descendants(const Graph& g, std::size_t v) {
  g.check(v);
  VertexSet seen(g.vertex_count());
  std::deque<std::size_t> queue{v};
  seen.insert(v);
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (const auto& [w, m] : g.successors(u)) {
      if (!seen.contains(w)) {
        seen.insert(w);
        queue.push_back(w);
      }
    }
  }
  return seen;
}

inline VertexSet descendants(const Graph& g, const VertexId& v) {
  return descendants(g, g.check(v));
}

/// U(w): every v with a path from v to w, w included.
inline VertexSet ancestors(const Graph& g, std::size_t w) {
  g.check(w);
  VertexSet seen(g.vertex_count());
  std::deque<std::size_t> queue{w};
  seen.insert(w);
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (auto p : g.predecessors(u)) {
      if (!seen.contains(p)) {
        seen.insert(p);
        queue.push_back(p);
      }
    }
  }
  return seen;
}

inline VertexSet ancestors(const Graph& g, const VertexId& w) {
  return ancestors(g, g.check(w));
}

inline bool reaches(const Graph& g, std::size_t v, std::size_t w) {
  g.check(w);
  return descendants(g, v).contains(w);
}

inline bool reaches(const Graph& g, const VertexId& v, const VertexId& w) {
  return reaches(g, g.check(v), g.check(w));
}

/// Row v holds descendants(v).
inline std::vector<VertexSet> transitive_closure(const Graph& g) {
  std::vector<VertexSet> rows;
  rows.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    rows.push_back(descendants(g, v));
  }
  return rows;
}

struct Component {
  std::vector<std::size_t> members;  // increasing
  bool cyclic = false;               // contains an edge between members
};

/// Tarjan's algorithm, iterative. Components are returned ordered by their
/// smallest member.
inline std::vector<Component> sccs(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), comp_of(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<Component> comps;
  std::size_t counter = 0;

  struct Frame {
    std::size_t v;
    Graph::Successors::const_iterator next;
  };

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> call;
    auto enter = [&](std::size_t v) {
      index[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack[v] = true;
      call.push_back({v, g.successors(v).begin()});
    };
    enter(root);
    while (!call.empty()) {
      auto& frame = call.back();
      const auto v = frame.v;
      if (frame.next != g.successors(v).end()) {
        auto w = frame.next->first;
        ++frame.next;
        if (index[w] == kUnvisited) {
          enter(w);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        Component c;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp_of[w] = comps.size();
          c.members.push_back(w);
        } while (w != v);
        std::sort(c.members.begin(), c.members.end());
        comps.push_back(std::move(c));
      }
      call.pop_back();
      if (!call.empty()) {
        auto u = call.back().v;
        low[u] = std::min(low[u], low[v]);
      }
    }
  }

  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& [w, m] : g.successors(v)) {
      if (comp_of[v] == comp_of[w]) comps[comp_of[v]].cyclic = true;
    }
  }
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    return a.members.front() < b.members.front();
  });
  return comps;
}

/// A pair of vertices without a common descendant.
struct UnreachablePair {
  std::size_t first;
  std::size_t second;
};

inline std::optional<UnreachablePair> find_undirected_pair(const Graph& g) {
  const auto closure = transitive_closure(g);
  for (std::size_t u = 0; u < closure.size(); ++u) {
    for (std::size_t v = u + 1; v < closure.size(); ++v) {
      if (!closure[u].intersects(closure[v])) return UnreachablePair{u, v};
    }
  }
  return std::nullopt;
}

inline bool is_downward_directed(const Graph& g) {
  return !find_undirected_pair(g).has_value();
}

/// Why a graph fails to be cofinal: `from` reaches neither the singular
/// vertex `target` nor, if `target_is_cycle`, any vertex of the cyclic
/// component containing `target`.
struct CofinalityFailure {
  std::size_t from;
  std::size_t target;
  bool target_is_cycle;
};

/// Every vertex must reach every singular vertex and at least one vertex of
/// every cyclic component. In a finite vertex set an infinite path has a tail
/// inside some cyclic component, and each cyclic component carries a
/// periodic infinite path, so this is exactly cofinality.
inline std::optional<CofinalityFailure> find_cofinality_failure(const Graph& g) {
  const auto closure = transitive_closure(g);
  const std::size_t n = g.vertex_count();
  for (std::size_t s = 0; s < n; ++s) {
    if (!is_singular(g, s)) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (!closure[v].contains(s)) return CofinalityFailure{v, s, false};
    }
  }
  for (const auto& c : sccs(g)) {
    if (!c.cyclic) continue;
    VertexSet members(n);
    for (auto m : c.members) members.insert(m);
    for (std::size_t v = 0; v < n; ++v) {
      if (!closure[v].intersects(members)) {
        return CofinalityFailure{v, c.members.front(), true};
      }
    }
  }
  return std::nullopt;
}

inline bool is_cofinal(const Graph& g) {
  return !find_cofinality_failure(g).has_value();
}

/// A finitely presented graph has countably many vertices, so the vertex set
/// itself separates.
inline bool has_csp(const Graph&) { return true; }

/// The countable separating set used by `has_csp`: all vertices.
inline VertexSet csp_witness(const Graph& g) { return VertexSet::all_of(g); }

}  // namespace pathalg
