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

// Directed multigraphs with edge multiplicities in {1, 2, ...} and omega
// (countably many parallel edges), plus the sink / infinite emitter / regular
// vertex trichotomy.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pathalg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unknown vertices, duplicate labels, violated preconditions.
class GraphError : public Error {
 public:
  using Error::Error;
};

// An enumeration or generation request exceeds the configured vertex cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

struct VertexId {
  std::string label;
  std::size_t index = 0;

  friend bool operator==(const VertexId&, const VertexId&) = default;
  friend auto operator<=>(const VertexId& a, const VertexId& b) {
    return a.index <=> b.index;
  }
};

/// Number of parallel edges between two vertices: a positive integer or
/// omega. Addition saturates at omega.
class Multiplicity {
 public:
  static Multiplicity finite(std::uint64_t n) {
    if (n == 0) throw GraphError("multiplicity must be at least 1");
    return Multiplicity(n);
  }
  static constexpr Multiplicity omega() { return Multiplicity(kOmega); }

  constexpr bool is_omega() const { return count_ == kOmega; }
  constexpr bool is_finite() const { return !is_omega(); }
  /// Finite count; meaningless for omega.
  constexpr std::uint64_t count() const { return count_; }

  friend Multiplicity operator+(Multiplicity a, Multiplicity b) {
    if (a.is_omega() || b.is_omega()) return omega();
    // Counts near 2^64 are treated as omega rather than wrapping.
    if (a.count_ > kOmega - 1 - b.count_) return omega();
    return Multiplicity(a.count_ + b.count_);
  }
  Multiplicity& operator+=(Multiplicity other) { return *this = *this + other; }

  friend bool operator==(Multiplicity, Multiplicity) = default;
  friend auto operator<=>(Multiplicity, Multiplicity) = default;

  std::string to_string() const {
    return is_omega() ? std::string("omega") : std::to_string(count_);
  }

 private:
  static constexpr std::uint64_t kOmega = UINT64_MAX;
  constexpr explicit Multiplicity(std::uint64_t n) : count_(n) {}
  std::uint64_t count_;
};

struct EdgeGroup {
  VertexId source;
  VertexId target;
  Multiplicity multiplicity = Multiplicity::omega();

  friend bool operator==(const EdgeGroup&, const EdgeGroup&) = default;
};

enum class VertexClass { sink, infinite_emitter, regular };

inline std::string_view to_string(VertexClass c) {
  switch (c) {
    case VertexClass::sink:
      return "sink";
    case VertexClass::infinite_emitter:
      return "infinite_emitter";
    case VertexClass::regular:
      return "regular";
  }
  return "?";
}

/// A finitely presented directed multigraph. Vertices keep insertion order;
/// parallel edges between the same ordered pair are merged into one group.
class Graph {
 public:
  using Successors = std::map<std::size_t, Multiplicity>;

  Graph() = default;

  VertexId add_vertex(std::string label) {
    if (label.empty()) throw GraphError("vertex label must be nonempty");
    if (std::any_of(label.begin(), label.end(),
                    [](unsigned char c) { return c <= ' ' || c == '#'; })) {
      throw GraphError("vertex label '" + label +
                       "' contains whitespace or '#'");
    }
    if (index_.contains(label)) {
      throw GraphError("duplicate vertex label '" + label + "'");
    }
    VertexId id{label, vertices_.size()};
    index_.emplace(std::move(label), id.index);
    vertices_.push_back(id);
    out_.emplace_back();
    in_.emplace_back();
    return id;
  }

  Graph& add_edge(const VertexId& src, const VertexId& dst,
                  Multiplicity m = Multiplicity::finite(1)) {
    return add_edge(check(src), check(dst), m);
  }

  Graph& add_edge(std::string_view src, std::string_view dst,
                  Multiplicity m = Multiplicity::finite(1)) {
    return add_edge(vertex(src).index, vertex(dst).index, m);
  }

  Graph& add_edge(std::size_t src, std::size_t dst,
                  Multiplicity m = Multiplicity::finite(1)) {
    check(src);
    check(dst);
    auto [it, inserted] = out_[src].try_emplace(dst, m);
    if (!inserted) it->second += m;
    in_[dst].insert(src);
    return *this;
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_group_count() const {
    std::size_t n = 0;
    for (const auto& s : out_) n += s.size();
    return n;
  }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const VertexId& vertex(std::size_t index) const { return vertices_.at(check(index)); }

  const VertexId& vertex(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) {
      throw GraphError("unknown vertex '" + std::string(label) + "'");
    }
    return vertices_[it->second];
  }

  std::optional<std::size_t> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Validates that `v` names a vertex of this graph and returns its index.
  std::size_t check(const VertexId& v) const {
    if (v.index >= vertices_.size() || vertices_[v.index].label != v.label) {
      throw GraphError("unknown vertex '" + v.label + "'");
    }
    return v.index;
  }

  std::size_t check(std::size_t index) const {
    if (index >= vertices_.size()) {
      throw GraphError("vertex index " + std::to_string(index) +
                       " out of range");
    }
    return index;
  }

  const Successors& successors(std::size_t v) const { return out_[check(v)]; }
  const std::set<std::size_t>& predecessors(std::size_t v) const {
    return in_[check(v)];
  }

  std::optional<Multiplicity> multiplicity(std::size_t src,
                                           std::size_t dst) const {
    const auto& s = successors(src);
    auto it = s.find(dst);
    if (it == s.end()) return std::nullopt;
    return it->second;
  }

  /// Total number of edges emitted by `v`; nullopt for a sink.
  std::optional<Multiplicity> out_multiplicity(std::size_t v) const {
    std::optional<Multiplicity> total;
    for (const auto& [dst, m] : successors(v)) {
      total = total ? *total + m : m;
    }
    return total;
  }

  /// Edge groups ordered by (source index, target index).
  std::vector<EdgeGroup> edges() const {
    std::vector<EdgeGroup> result;
    for (std::size_t s = 0; s < out_.size(); ++s) {
      for (const auto& [t, m] : out_[s]) {
        result.push_back({vertices_[s], vertices_[t], m});
      }
    }
    return result;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.out_ == b.out_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Successors> out_;
  std::vector<std::set<std::size_t>> in_;
};

inline VertexId add_vertex(Graph& g, std::string label) {
  return g.add_vertex(std::move(label));
}

inline Graph& add_edge(Graph& g, const VertexId& src, const VertexId& dst,
                       Multiplicity m = Multiplicity::finite(1)) {
  return g.add_edge(src, dst, m);
}

inline VertexClass vertex_class(const Graph& g, std::size_t v) {
  auto total = g.out_multiplicity(v);
  if (!total) return VertexClass::sink;
  return total->is_omega() ? VertexClass::infinite_emitter
                           : VertexClass::regular;
}

inline VertexClass vertex_class(const Graph& g, const VertexId& v) {
  return vertex_class(g, g.check(v));
}

inline bool is_regular(const Graph& g, std::size_t v) {
  return vertex_class(g, v) == VertexClass::regular;
}

inline bool is_singular(const Graph& g, std::size_t v) {
  return !is_regular(g, v);
}

}  // namespace pathalg
