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

// Brute-force reference implementations, written straight from the
// definitions and sharing no code with the library algorithms beyond the
// graph container. Exponential; meant for graphs of a handful of vertices.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pathalg/graph.hpp"
#include "pathalg/vertex_set.hpp"

namespace pathalg::oracle {

using BoolMatrix = std::vector<std::vector<bool>>;

/// reach[v][w] iff some walk of length 0..n-1 leads from v to w, computed by
/// accumulating boolean products with the adjacency matrix.
inline BoolMatrix reach_matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  BoolMatrix adj(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) adj[e.source.index][e.target.index] = true;
  BoolMatrix reach(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) reach[v][v] = true;
  BoolMatrix frontier = reach;  // walks of exactly the current length
  for (std::size_t len = 1; len < n; ++len) {
    BoolMatrix next(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (frontier[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (adj[k][j]) next[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (next[i][j]) reach[i][j] = true;
    frontier = std::move(next);
  }
  return reach;
}

inline VertexSet descendants(const Graph& g, std::size_t v) {
  const auto reach = reach_matrix(g);
  VertexSet s(g.vertex_count());
  for (std::size_t w = 0; w < g.vertex_count(); ++w)
    if (reach[v][w]) s.insert(w);
  return s;
}

inline VertexSet ancestors(const Graph& g, std::size_t w) {
  const auto reach = reach_matrix(g);
  VertexSet s(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (reach[v][w]) s.insert(v);
  return s;
}

inline VertexSet hereditary_closure(const Graph& g, const VertexSet& w) {
  const auto reach = reach_matrix(g);
  VertexSet s(g.vertex_count());
  w.for_each([&](std::size_t v) {
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
      if (reach[v][u]) s.insert(u);
  });
  return s;
}

inline bool is_hereditary(const Graph& g, const VertexSet& h) {
  for (const auto& e : g.edges())
    if (h.contains(e.source.index) && !h.contains(e.target.index)) return false;
  return true;
}

/// Regular vertex: at least one and finitely many emitted edges.
inline bool is_regular(const Graph& g, std::size_t v) {
  std::uint64_t total = 0;
  for (const auto& e : g.edges()) {
    if (e.source.index != v) continue;
    if (e.multiplicity.is_omega()) return false;
    total += e.multiplicity.count();
  }
  return total > 0;
}

inline bool is_saturated(const Graph& g, const VertexSet& h) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (h.contains(v) || !oracle::is_regular(g, v)) continue;
    bool all_in = true;
    for (const auto& e : g.edges())
      if (e.source.index == v && !h.contains(e.target.index)) all_in = false;
    if (all_in) return false;
  }
  return true;
}

/// Every saturated hereditary subset, by testing all 2^n subsets against the
/// definitions.
inline std::vector<VertexSet> saturated_hereditary_family(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto s = VertexSet::from_mask(n, mask);
    if (oracle::is_hereditary(g, s) && oracle::is_saturated(g, s)) out.push_back(std::move(s));
  }
  return out;
}

/// Intersection of all saturated hereditary supersets of h.
inline VertexSet least_saturated_hereditary_superset(const Graph& g, const VertexSet& h) {
  VertexSet result = VertexSet::all_of(g);
  for (const auto& k : saturated_hereditary_family(g))
    if (h.is_subset_of(k)) result &= k;
  return result;
}

inline bool is_downward_directed(const Graph& g) {
  const auto reach = reach_matrix(g);
  const std::size_t n = g.vertex_count();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      bool common = false;
      for (std::size_t w = 0; w < n && !common; ++w) common = reach[u][w] && reach[v][w];
      if (!common) return false;
    }
  return true;
}

/// Whether some cycle has no exit. An exitless cycle visits distinct
/// vertices, so enumerating vertex-simple cycles suffices; a cycle is
/// exitless iff each of its vertices emits exactly one edge in total.
inline bool has_exitless_cycle(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> single_exit(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    std::uint64_t total = 0;
    bool omega = false;
    for (const auto& e : g.edges()) {
      if (e.source.index != v) continue;
      if (e.multiplicity.is_omega()) omega = true;
      else total += e.multiplicity.count();
    }
    single_exit[v] = !omega && total == 1;
  }
  bool found = false;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);
  // Cycles whose smallest vertex is `start`.
  auto dfs = [&](auto&& self, std::size_t start, std::size_t u) -> void {
    for (const auto& [w, m] : g.successors(u)) {
      if (found) return;
      if (w == start) {
        bool exitless = true;
        for (auto p : path) exitless = exitless && single_exit[p];
        if (exitless) found = true;
      } else if (w > start && !on_path[w]) {
        on_path[w] = true;
        path.push_back(w);
        self(self, start, w);
        path.pop_back();
        on_path[w] = false;
      }
    }
  };
  for (std::size_t s = 0; s < n && !found; ++s) {
    path = {s};
    on_path.assign(n, false);
    on_path[s] = true;
    dfs(dfs, s, s);
  }
  return found;
}

/// Cofinality from the definition: every vertex reaches every singular
/// vertex and some vertex of every infinite path. An infinite path in a
/// finite graph repeats a vertex and so contains the vertex set of a
/// vertex-simple cycle, and each such cycle traversed forever is an infinite
/// path; hence checking the vertex-simple cycles suffices.
inline bool is_cofinal(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const auto reach = reach_matrix(g);
  for (std::size_t s = 0; s < n; ++s) {
    if (oracle::is_regular(g, s)) continue;
    for (std::size_t v = 0; v < n; ++v)
      if (!reach[v][s]) return false;
  }
  bool ok = true;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);
  auto reached_by_all = [&] {
    for (std::size_t v = 0; v < n; ++v) {
      bool hit = false;
      for (auto p : path) hit = hit || reach[v][p];
      if (!hit) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, std::size_t start, std::size_t u) -> void {
    for (const auto& [w, m] : g.successors(u)) {
      if (!ok) return;
      if (w == start) {
        ok = reached_by_all();
      } else if (w > start && !on_path[w]) {
        on_path[w] = true;
        path.push_back(w);
        self(self, start, w);
        path.pop_back();
        on_path[w] = false;
      }
    }
  };
  for (std::size_t s = 0; s < n && ok; ++s) {
    path = {s};
    on_path.assign(n, false);
    on_path[s] = true;
    dfs(dfs, s, s);
  }
  return ok;
}

/// Simple cycles based at v (closed paths returning to v only at the end),
/// counting parallel edges separately, saturated at 2. Only paths of length
/// up to 3n are explored: when the count is infinite, two such paths already
/// exist within that length. Omega groups are expanded to two copies.
inline std::uint64_t simple_cycle_count(const Graph& g, std::size_t v) {
  const std::size_t n = g.vertex_count();
  // dist[u]: fewest edges from u back to v through vertices other than v,
  // by Bellman-Ford style relaxation.
  const std::size_t far = 4 * n + 1;
  std::vector<std::size_t> dist(n, far);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& e : g.edges()) {
      const auto s = e.source.index, t = e.target.index;
      if (s == v) continue;
      const std::size_t via = t == v ? 1 : dist[t] + 1;
      if (via < dist[s]) {
        dist[s] = via;
        changed = true;
      }
    }
  }
  const std::size_t max_len = 3 * n;
  std::uint64_t count = 0;
  auto dfs = [&](auto&& self, std::size_t u, std::size_t len) -> void {
    for (const auto& e : g.edges()) {
      if (count >= 2) return;
      if (e.source.index != u) continue;
      const std::uint64_t copies =
          e.multiplicity.is_omega() ? 2 : e.multiplicity.count();
      const auto t = e.target.index;
      for (std::uint64_t k = 0; k < copies && count < 2; ++k) {
        if (t == v) {
          ++count;
        } else if (dist[t] < far && len + 1 + dist[t] <= max_len) {
          self(self, t, len + 1);
        }
      }
    }
  };
  dfs(dfs, v, 0);
  return count;
}

}  // namespace pathalg::oracle
