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

// Hereditary and saturated vertex sets, saturation, the lattice of saturated
// hereditary sets, breaking vertices and admissible pairs (the indexing set
// of gauge-invariant ideals), plus restriction and quotient graphs.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pathalg/graph.hpp"
#include "pathalg/reachability.hpp"
#include "pathalg/vertex_set.hpp"

namespace pathalg {

inline constexpr std::size_t kDefaultLatticeCap = 20;

struct LatticeLimits {
  std::size_t max_vertices = kDefaultLatticeCap;
  bool force = false;
};

struct SaturationTrace {
  // H_0 = input, then each strictly larger stage; the last is saturated.
  std::vector<VertexSet> stages;
};

struct AdmissiblePair {
  VertexSet hereditary;  // saturated hereditary H
  VertexSet breaking;    // S, a subset of the breaking vertices of H

  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
};

inline bool is_hereditary(const Graph& g, const VertexSet& h) {
  require_over(g, h);
  bool ok = true;
  h.for_each([&](std::size_t v) {
    for (const auto& [w, m] : g.successors(v)) {
      if (!h.contains(w)) ok = false;
    }
  });
  return ok;
}

namespace detail {

inline bool emits_only_into(const Graph& g, std::size_t v, const VertexSet& h) {
  for (const auto& [w, m] : g.successors(v)) {
    if (!h.contains(w)) return false;
  }
  return true;
}

}  // namespace detail

/// No regular vertex outside H emits only into H.
inline bool is_saturated(const Graph& g, const VertexSet& h) {
  require_over(g, h);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!h.contains(v) && is_regular(g, v) && detail::emits_only_into(g, v, h)) {
      return false;
    }
  }
  return true;
}

/// Least saturated hereditary superset of a hereditary set, by repeatedly
/// adding every regular vertex whose edges all land in the previous stage.
inline std::pair<VertexSet, SaturationTrace> saturate_traced(const Graph& g,
                                                             const VertexSet& h) {
  if (!is_hereditary(g, h)) throw GraphError("saturate: input set is not hereditary");
  SaturationTrace trace;
  trace.stages.push_back(h);
  while (true) {
    const VertexSet& prev = trace.stages.back();
    VertexSet next = prev;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (!prev.contains(v) && is_regular(g, v) && detail::emits_only_into(g, v, prev)) {
        next.insert(v);
      }
    }
    if (next == prev) break;
    trace.stages.push_back(std::move(next));
  }
  VertexSet result = trace.stages.back();
  return {std::move(result), std::move(trace)};
}

inline VertexSet saturate(const Graph& g, const VertexSet& h) {
  return saturate_traced(g, h).first;
}

/// Union of descendants(v) over v in W: the least hereditary superset.
inline VertexSet hereditary_closure(const Graph& g, const VertexSet& w) {
  require_over(g, w);
  VertexSet out(g.vertex_count());
  w.for_each([&](std::size_t v) {
    if (!out.contains(v)) out |= descendants(g, v);
  });
  return out;
}

namespace detail {

inline void check_cap(const Graph& g, const LatticeLimits& limits) {
  const std::size_t n = g.vertex_count();
  if (n > limits.max_vertices && !limits.force) {
    throw CapExceeded("lattice enumeration over " + std::to_string(n) +
                      " vertices exceeds the cap of " +
                      std::to_string(limits.max_vertices));
  }
  if (n > 62) {
    throw CapExceeded("lattice enumeration supports at most 62 vertices");
  }
}

}  // namespace detail

/// Every saturated hereditary subset, by checking all 2^n subsets. Sorted by
/// size, then lexicographically by members.
inline std::vector<VertexSet> enumerate_saturated_hereditary(
    const Graph& g, const LatticeLimits& limits = {}) {
  detail::check_cap(g, limits);
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> succ(n, 0);
  std::vector<bool> regular(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& [w, m] : g.successors(v)) succ[v] |= std::uint64_t{1} << w;
    regular[v] = is_regular(g, v);
  }
  std::vector<VertexSet> result;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      const bool in = (mask >> v) & 1U;
      const bool into = (succ[v] & ~mask) == 0;
      if (in && !into) ok = false;                   // hereditary
      if (!in && regular[v] && into) ok = false;     // saturated
    }
    if (ok) result.push_back(VertexSet::from_mask(n, mask));
  }
  std::sort(result.begin(), result.end());
  return result;
}

/// Infinite emitters outside H that send finitely many, but at least one,
/// edges outside H.
inline VertexSet breaking_vertices(const Graph& g, const VertexSet& h) {
  if (!is_hereditary(g, h) || !is_saturated(g, h)) {
    throw GraphError("breaking_vertices: set is not saturated hereditary");
  }
  VertexSet out(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (h.contains(v) || vertex_class(g, v) != VertexClass::infinite_emitter) continue;
    std::optional<Multiplicity> escaping;
    for (const auto& [w, m] : g.successors(v)) {
      if (!h.contains(w)) escaping = escaping ? *escaping + m : m;
    }
    if (escaping && escaping->is_finite()) out.insert(v);
  }
  return out;
}

namespace detail {

inline std::vector<VertexSet> subsets_of(const VertexSet& s) {
  const auto members = s.members();
  if (members.size() > 20) {
    throw CapExceeded("more than 20 breaking vertices for one saturated set");
  }
  std::vector<VertexSet> out;
  const std::uint64_t end = std::uint64_t{1} << members.size();
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    VertexSet sub(s.universe());
    for (std::size_t i = 0; i < members.size(); ++i) {
      if ((mask >> i) & 1U) sub.insert(members[i]);
    }
    out.push_back(std::move(sub));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// All (H, S) with H saturated hereditary and S a set of breaking vertices
/// for H, ordered by H and then S.
inline std::vector<AdmissiblePair> admissible_pairs(const Graph& g,
                                                    const LatticeLimits& limits = {}) {
  std::vector<AdmissiblePair> out;
  for (auto& h : enumerate_saturated_hereditary(g, limits)) {
    for (auto& s : detail::subsets_of(breaking_vertices(g, h))) {
      out.push_back({h, std::move(s)});
    }
  }
  return out;
}

/// Containment of the corresponding ideals: H within H', and S within
/// H' union S'.
inline bool pair_leq(const AdmissiblePair& p, const AdmissiblePair& q) {
  if (p.hereditary.universe() != q.hereditary.universe() ||
      p.breaking.universe() != q.breaking.universe() ||
      p.hereditary.universe() != p.breaking.universe()) {
    throw GraphError("pair_leq: admissible pairs belong to different graphs");
  }
  return p.hereditary.is_subset_of(q.hereditary) &&
         p.breaking.is_subset_of(q.hereditary | q.breaking);
}

inline AdmissiblePair top_pair(const Graph& g) {
  return {VertexSet::all_of(g), VertexSet::empty_of(g)};
}

/// Admissible pairs other than the top (E^0, {}) that are maximal among
/// those below the top.
inline std::vector<AdmissiblePair> maximal_proper_pairs(const Graph& g,
                                                        const LatticeLimits& limits = {}) {
  const auto pairs = admissible_pairs(g, limits);
  const auto top = top_pair(g);
  std::vector<AdmissiblePair> out;
  for (const auto& p : pairs) {
    if (p == top) continue;
    bool maximal = true;
    for (const auto& q : pairs) {
      if (q == top || q == p) continue;
      if (pair_leq(p, q)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(p);
  }
  return out;
}

/// The graph on H with every edge emitted from H.
inline Graph restriction_graph(const Graph& g, const VertexSet& h) {
  if (!is_hereditary(g, h)) throw GraphError("restriction_graph: set is not hereditary");
  Graph out;
  std::vector<std::size_t> local(g.vertex_count(), 0);
  h.for_each([&](std::size_t v) {
    local[v] = out.vertex_count();
    out.add_vertex(g.vertex(v).label);
  });
  h.for_each([&](std::size_t v) {
    for (const auto& [w, m] : g.successors(v)) out.add_edge(local[v], local[w], m);
  });
  return out;
}

/// The graph on the complement of H with the edges between its vertices.
inline Graph quotient_graph(const Graph& g, const VertexSet& h) {
  if (!is_hereditary(g, h) || !is_saturated(g, h)) {
    throw GraphError("quotient_graph: set is not saturated hereditary");
  }
  const VertexSet rest = h.complement();
  Graph out;
  std::vector<std::size_t> local(g.vertex_count(), 0);
  rest.for_each([&](std::size_t v) {
    local[v] = out.vertex_count();
    out.add_vertex(g.vertex(v).label);
  });
  rest.for_each([&](std::size_t v) {
    for (const auto& [w, m] : g.successors(v)) {
      if (rest.contains(w)) out.add_edge(local[v], local[w], m);
    }
  });
  return out;
}

inline std::string format_pair(const Graph& g, const AdmissiblePair& p) {
  return "(" + format_set(g, p.hereditary) + ", " + format_set(g, p.breaking) + ")";
}

}  // namespace pathalg
