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

#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "pathalg/graph.hpp"

namespace pathalg {

/// A subset of a graph's vertices, stored as a dense bitset over vertex
/// indices. The universe size identifies the owning graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}
  VertexSet(std::size_t universe, std::initializer_list<std::size_t> members)
      : bits_(universe) {
    for (auto m : members) insert(m);
  }

  static VertexSet empty_of(const Graph& g) { return VertexSet(g.vertex_count()); }
  static VertexSet all_of(const Graph& g) {
    VertexSet s(g.vertex_count());
    s.bits_.set();
    return s;
  }

  static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
    VertexSet s(universe);
    for (std::size_t i = 0; i < universe && i < 64; ++i) {
      if ((mask >> i) & 1U) s.bits_.set(i);
    }
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool full() const { return bits_.all(); }

  bool contains(std::size_t v) const { return v < bits_.size() && bits_.test(v); }
  void insert(std::size_t v) { bits_.set(checked(v)); }
  void erase(std::size_t v) { bits_.reset(checked(v)); }

  bool is_subset_of(const VertexSet& other) const {
    same_universe(other);
    return bits_.is_subset_of(other.bits_);
  }
  bool intersects(const VertexSet& other) const {
    same_universe(other);
    return bits_.intersects(other.bits_);
  }

  VertexSet& operator|=(const VertexSet& o) { same_universe(o); bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(const VertexSet& o) { same_universe(o); bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(const VertexSet& o) { same_universe(o); bits_ -= o.bits_; return *this; }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet c = *this;
    c.bits_.flip();
    return c;
  }

  /// Members in increasing index order.
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
      out.push_back(i);
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
      f(static_cast<std::size_t>(i));
    }
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.bits_ == b.bits_;
  }

  /// Orders by size first, then lexicographically by the sorted member list.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    auto x = a.members();
    auto y = b.members();
    return x <=> y;
  }

 private:
  using Bits = boost::dynamic_bitset<>;

  std::size_t checked(std::size_t v) const {
    if (v >= bits_.size()) {
      throw GraphError("vertex index " + std::to_string(v) +
                       " outside vertex set universe");
    }
    return v;
  }
  void same_universe(const VertexSet& o) const {
    if (o.universe() != universe()) {
      throw GraphError("vertex sets belong to different graphs");
    }
  }

  Bits bits_;
};

/// Throws unless `s` is a vertex set over `g`.
inline void require_over(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count()) {
    throw GraphError("vertex set does not belong to this graph");
  }
}

inline std::string format_set(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t v) {
    if (!first) out += ", ";
    first = false;
    out += g.vertex(v).label;
  });
  return out + "}";
}

}  // namespace pathalg
