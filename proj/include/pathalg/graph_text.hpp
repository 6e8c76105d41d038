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

// Line-oriented graph documents:
//
//   format 1              optional; only version 1 exists
//   vertex <label>
//   edge <src> <dst>      multiplicity 1
//   edge <src> <dst> x3   multiplicity 3
//   edge <src> <dst> xinf multiplicity omega
//   # comment
//
// Repeated edge lines between the same pair add up.

#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pathalg/graph.hpp"

namespace pathalg {

inline constexpr int kGraphFormatVersion = 1;

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) words.push_back(s.substr(i, j - i));
    i = j;
  }
  return words;
}

inline Multiplicity parse_multiplicity(std::string_view token, std::size_t line) {
  if (token.size() < 2 || token[0] != 'x') {
    throw ParseError(line, "expected multiplicity x<n> or xinf, got '" +
                               std::string(token) + "'");
  }
  auto digits = token.substr(1);
  if (digits == "inf") return Multiplicity::omega();
  std::uint64_t n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ParseError(line, "bad multiplicity '" + std::string(token) + "'");
  }
  if (n == 0) throw ParseError(line, "multiplicity must be at least 1");
  return Multiplicity::finite(n);
}

}  // namespace detail

inline Graph parse_graph(std::string_view text) {
  Graph g;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto words = detail::split_words(line);
    if (words.empty()) continue;

    const auto keyword = words[0];
    if (keyword == "format") {
      if (words.size() != 2 || words[1] != std::to_string(kGraphFormatVersion)) {
        throw ParseError(line_no, "unsupported format declaration");
      }
    } else if (keyword == "vertex") {
      if (words.size() != 2) throw ParseError(line_no, "expected: vertex <label>");
      try {
        g.add_vertex(std::string(words[1]));
      } catch (const GraphError& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (keyword == "edge") {
      if (words.size() != 3 && words.size() != 4) {
        throw ParseError(line_no, "expected: edge <src> <dst> [x<n>|xinf]");
      }
      auto src = g.find(words[1]);
      auto dst = g.find(words[2]);
      if (!src) throw ParseError(line_no, "unknown vertex '" + std::string(words[1]) + "'");
      if (!dst) throw ParseError(line_no, "unknown vertex '" + std::string(words[2]) + "'");
      auto m = words.size() == 4 ? detail::parse_multiplicity(words[3], line_no)
                                 : Multiplicity::finite(1);
      g.add_edge(*src, *dst, m);
    } else {
      throw ParseError(line_no, "unknown keyword '" + std::string(keyword) + "'");
    }
    if (end == text.size()) break;
  }
  return g;
}

inline std::string serialize_graph(const Graph& g) {
  std::string out = "format " + std::to_string(kGraphFormatVersion) + "\n";
  for (const auto& v : g.vertices()) out += "vertex " + v.label + "\n";
  for (const auto& e : g.edges()) {
    out += "edge " + e.source.label + " " + e.target.label;
    if (e.multiplicity.is_omega()) {
      out += " xinf";
    } else if (e.multiplicity.count() != 1) {
      out += " x" + std::to_string(e.multiplicity.count());
    }
    out += "\n";
  }
  return out;
}

namespace detail {

// Adjacency text of g under the vertex permutation `order` (new -> old).
inline std::string relabeled_adjacency(const Graph& g,
                                       const std::vector<std::size_t>& order) {
  const std::size_t n = order.size();
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto m = g.multiplicity(order[i], order[j]);
      out += m ? (m->is_omega() ? std::string("w") : std::to_string(m->count()))
               : std::string("0");
      out += ',';
    }
    out += ';';
  }
  return out;
}

}  // namespace detail

/// Serialization of the isomorphism class of g: vertices renamed v0..v(n-1)
/// under the permutation giving the smallest adjacency text. Brute force over
/// all n! orders, so limited to 8 vertices.
inline std::string canonical_serialization(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 8) throw CapExceeded("canonical form supports at most 8 vertices");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> best = order;
  std::string best_text = detail::relabeled_adjacency(g, order);
  while (std::next_permutation(order.begin(), order.end())) {
    auto text = detail::relabeled_adjacency(g, order);
    if (text < best_text) {
      best_text = std::move(text);
      best = order;
    }
  }
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[best[i]] = i;
  Graph canon;
  for (std::size_t i = 0; i < n; ++i) canon.add_vertex("v" + std::to_string(i));
  for (const auto& e : g.edges()) {
    canon.add_edge(position[e.source.index], position[e.target.index], e.multiplicity);
  }
  return serialize_graph(canon);
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() &&
         a.edge_group_count() == b.edge_group_count() &&
         canonical_serialization(a) == canonical_serialization(b);
}

}  // namespace pathalg
