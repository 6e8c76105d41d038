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

// Cycles, exits, Condition (L) and Condition (K).
//
// A simple cycle based at v is a closed path that returns to v only at its
// last edge; other vertices may repeat. Parallel edges are distinct edges, so
// a loop of multiplicity 2 is two simple cycles.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pathalg/graph.hpp"
#include "pathalg/reachability.hpp"
#include "pathalg/vertex_set.hpp"

namespace pathalg {

/// One edge of a path. `copy` distinguishes parallel edges of a group.
struct Step {
  std::size_t source;
  std::size_t target;
  std::uint64_t copy = 0;

  friend bool operator==(const Step&, const Step&) = default;
};

struct Cycle {
  std::vector<Step> steps;

  std::size_t base() const { return steps.front().source; }
  std::size_t length() const { return steps.size(); }

  /// Nonempty, consecutive, and closed.
  bool well_formed() const {
    if (steps.empty()) return false;
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
      if (steps[i].target != steps[i + 1].source) return false;
    }
    return steps.back().target == steps.front().source;
  }

  std::vector<std::size_t> vertices() const {
    std::vector<std::size_t> vs;
    for (const auto& s : steps) vs.push_back(s.source);
    return vs;
  }

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

inline std::string format_cycle(const Graph& g, const Cycle& c) {
  std::string out = g.vertex(c.base()).label;
  for (const auto& s : c.steps) out += " -> " + g.vertex(s.target).label;
  return out;
}

enum class SimpleCycleCount { zero, one, two_or_more };

inline std::string_view to_string(SimpleCycleCount c) {
  switch (c) {
    case SimpleCycleCount::zero:
      return "zero";
    case SimpleCycleCount::one:
      return "one";
    case SimpleCycleCount::two_or_more:
      return "two_or_more";
  }
  return "?";
}

/// Finds a cycle none of whose vertices emits a second edge.
///
/// Such a cycle lives entirely inside the functional subgraph of vertices
/// with out-multiplicity exactly 1, and every cycle of that subgraph is
/// exitless. The cycle returned is the first one met scanning vertices in
/// order, rotated to start at its smallest vertex.
inline std::optional<Cycle> find_cycle_without_exit(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> next(n, kNone);
  for (std::size_t v = 0; v < n; ++v) {
    auto total = g.out_multiplicity(v);
    if (total && total->is_finite() && total->count() == 1) {
      next[v] = g.successors(v).begin()->first;
    }
  }

  // 0 = unvisited, 1 = on current walk, 2 = done
  std::vector<int> state(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (state[start] != 0) continue;
    std::vector<std::size_t> walk;
    std::size_t v = start;
    while (v != kNone && state[v] == 0) {
      state[v] = 1;
      walk.push_back(v);
      v = next[v];
    }
    if (v != kNone && state[v] == 1) {
      auto first = std::find(walk.begin(), walk.end(), v);
      std::vector<std::size_t> ring(first, walk.end());
      std::rotate(ring.begin(), std::min_element(ring.begin(), ring.end()),
                  ring.end());
      Cycle c;
      for (std::size_t i = 0; i < ring.size(); ++i) {
        c.steps.push_back({ring[i], ring[(i + 1) % ring.size()], 0});
      }
      for (auto w : walk) state[w] = 2;
      return c;
    }
    for (auto w : walk) state[w] = 2;
  }
  return std::nullopt;
}

inline bool is_condition_L(const Graph& g) {
  return !find_cycle_without_exit(g).has_value();
}

namespace detail {

// Counts saturating at 2; omega counts as 2.
inline std::uint64_t saturate2(Multiplicity m) {
  return m.is_omega() ? 2 : std::min<std::uint64_t>(m.count(), 2);
}
inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return std::min<std::uint64_t>(a + b, 2);
}
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  return std::min<std::uint64_t>(a * b, 2);
}

}  // namespace detail

/// Number of simple cycles based at v, saturated at two.
///
/// Let R be the vertices other than v that lie on some first-return path:
/// reachable from v and able to reach v without passing through v. A cycle
/// among R yields infinitely many first-return paths; otherwise R is acyclic
/// and paths are counted by dynamic programming over it.
inline SimpleCycleCount simple_cycle_count_at(const Graph& g, std::size_t v) {
  g.check(v);
  const std::size_t n = g.vertex_count();

  VertexSet forward(n);
  {
    std::deque<std::size_t> queue;
    for (const auto& [w, m] : g.successors(v)) {
      if (w != v && !forward.contains(w)) {
        forward.insert(w);
        queue.push_back(w);
      }
    }
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (const auto& [w, m] : g.successors(u)) {
        if (w != v && !forward.contains(w)) {
          forward.insert(w);
          queue.push_back(w);
        }
      }
    }
  }
  VertexSet backward(n);
  {
    std::deque<std::size_t> queue;
    for (auto p : g.predecessors(v)) {
      if (p != v && !backward.contains(p)) {
        backward.insert(p);
        queue.push_back(p);
      }
    }
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto p : g.predecessors(u)) {
        if (p != v && !backward.contains(p)) {
          backward.insert(p);
          queue.push_back(p);
        }
      }
    }
  }
  const VertexSet interior = forward & backward;

  std::uint64_t total = 0;
  if (auto loop = g.multiplicity(v, v)) total = detail::saturate2(*loop);

  if (!interior.empty()) {
    Graph sub;
    std::vector<std::size_t> local(n, 0);
    interior.for_each([&](std::size_t u) {
      local[u] = sub.vertex_count();
      sub.add_vertex(g.vertex(u).label);
    });
    interior.for_each([&](std::size_t u) {
      for (const auto& [w, m] : g.successors(u)) {
        if (interior.contains(w)) sub.add_edge(local[u], local[w], m);
      }
    });
    for (const auto& c : sccs(sub)) {
      if (c.cyclic) return SimpleCycleCount::two_or_more;
    }

    // paths[u]: first-return paths from u to v with interior in R.
    constexpr std::uint64_t kUnknown = 3;
    std::vector<std::uint64_t> paths(n, kUnknown);
    auto count_from = [&](auto&& self, std::size_t u) -> std::uint64_t {
      if (paths[u] != kUnknown) return paths[u];
      std::uint64_t p = 0;
      for (const auto& [w, m] : g.successors(u)) {
        if (w == v) {
          p = detail::sat_add(p, detail::saturate2(m));
        } else if (interior.contains(w)) {
          p = detail::sat_add(p, detail::sat_mul(detail::saturate2(m), self(self, w)));
        }
      }
      return paths[u] = p;
    };
    for (const auto& [w, m] : g.successors(v)) {
      if (interior.contains(w)) {
        total = detail::sat_add(
            total, detail::sat_mul(detail::saturate2(m), count_from(count_from, w)));
      }
    }
  }

  switch (total) {
    case 0:
      return SimpleCycleCount::zero;
    case 1:
      return SimpleCycleCount::one;
    default:
      return SimpleCycleCount::two_or_more;
  }
}

inline SimpleCycleCount simple_cycle_count_at(const Graph& g, const VertexId& v) {
  return simple_cycle_count_at(g, g.check(v));
}

/// A vertex that is the base of exactly one simple cycle.
inline std::optional<std::size_t> find_single_cycle_vertex(const Graph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (simple_cycle_count_at(g, v) == SimpleCycleCount::one) return v;
  }
  return std::nullopt;
}

inline bool is_condition_K(const Graph& g) {
  return !find_single_cycle_vertex(g).has_value();
}

inline bool is_acyclic(const Graph& g) {
  for (const auto& c : sccs(g)) {
    if (c.cyclic) return false;
  }
  return true;
}

/// Enumerates simple cycles based at `base` by depth-first search, expanding
/// parallel edges into distinct copies (an omega group is expanded to two
/// copies). Only cycles of length at most `max_length` are produced, and at
/// most `cap` of them.
///
/// Every first-return path has interior vertices that can reach `base`
/// without passing through it, so the search only extends into such
/// vertices and only while the remaining length budget allows a return.
inline std::vector<Cycle> enumerate_simple_cycles_at(const Graph& g,
                                                     std::size_t base,
                                                     std::size_t cap,
                                                     std::size_t max_length) {
  g.check(base);
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max();

  // dist[u]: fewest edges from u back to base, interior avoiding base.
  std::vector<std::size_t> dist(n, kFar);
  {
    std::deque<std::size_t> queue;
    for (auto p : g.predecessors(base)) {
      if (p != base && dist[p] == kFar) {
        dist[p] = 1;
        queue.push_back(p);
      }
    }
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto p : g.predecessors(u)) {
        if (p != base && dist[p] == kFar) {
          dist[p] = dist[u] + 1;
          queue.push_back(p);
        }
      }
    }
  }

  std::vector<Cycle> found;
  std::vector<Step> path;
  auto copies = [](Multiplicity m) -> std::uint64_t {
    return m.is_omega() ? 2 : m.count();
  };
  auto dfs = [&](auto&& self, std::size_t u) -> void {
    for (const auto& [w, m] : g.successors(u)) {
      if (found.size() >= cap) return;
      if (w == base) {
        for (std::uint64_t k = 0; k < copies(m) && found.size() < cap; ++k) {
          path.push_back({u, w, k});
          found.push_back(Cycle{path});
          path.pop_back();
        }
        continue;
      }
      if (dist[w] == kFar || path.size() + 1 + dist[w] > max_length) continue;
      for (std::uint64_t k = 0; k < copies(m) && found.size() < cap; ++k) {
        path.push_back({u, w, k});
        self(self, w);
        path.pop_back();
      }
    }
  };
  if (max_length > 0 && cap > 0) dfs(dfs, base);
  return found;
}

/// All simple cycles of length at most `max_length` (default: vertex count),
/// grouped by base vertex in index order, truncated at `cap`.
inline std::vector<Cycle> enumerate_simple_cycles(
    const Graph& g, std::size_t cap,
    std::optional<std::size_t> max_length = std::nullopt) {
  const std::size_t limit = max_length.value_or(g.vertex_count());
  std::vector<Cycle> all;
  for (std::size_t v = 0; v < g.vertex_count() && all.size() < cap; ++v) {
    auto at = enumerate_simple_cycles_at(g, v, cap - all.size(), limit);
    all.insert(all.end(), at.begin(), at.end());
  }
  return all;
}

}  // namespace pathalg
