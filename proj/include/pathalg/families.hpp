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

// Example graph families over a set X or an ordinal kappa:
//
//   E_A(X)   vertices: finite nonempty subsets of X; edges A -> A' for A < A'
//   E_L(X)   E_A(X) plus one loop at every vertex
//   E_K(X)   E_A(X) plus two loops at every vertex
//   E_P(X)   vertices: all subsets of X; edges A -> A' for A < A'
//   E_kappa  vertices: ordinals below kappa; edges a -> b for a < b
//
// For a finite parameter the graph is generated concretely. For infinite
// parameters the structure is evaluated symbolically: every verdict comes
// from a fixed table whose cells carry their one-line justification.

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pathalg/classify.hpp"
#include "pathalg/graph.hpp"

namespace pathalg {

class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

enum class FamilyKind { E_A, E_L, E_K, E_P, E_kappa };

inline std::string_view to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::E_A:
      return "E_A";
    case FamilyKind::E_L:
      return "E_L";
    case FamilyKind::E_K:
      return "E_K";
    case FamilyKind::E_P:
      return "E_P";
    case FamilyKind::E_kappa:
      return "E_kappa";
  }
  return "?";
}

/// Cardinality of the underlying set X. Ordered finite < aleph0 <
/// uncountable < at_least_continuum; at_least_continuum is itself uncountable.
struct CardinalSpec {
  enum class Kind { finite, aleph0, uncountable, at_least_continuum };
  Kind kind = Kind::finite;
  std::uint64_t n = 1;  // only for finite

  static CardinalSpec finite(std::uint64_t n) {
    if (n == 0) throw GraphError("finite cardinal parameter must be at least 1");
    return {Kind::finite, n};
  }
  static CardinalSpec aleph0() { return {Kind::aleph0, 0}; }
  static CardinalSpec uncountable() { return {Kind::uncountable, 0}; }
  static CardinalSpec at_least_continuum() { return {Kind::at_least_continuum, 0}; }

  bool is_finite() const { return kind == Kind::finite; }
  bool is_countable() const { return kind == Kind::finite || kind == Kind::aleph0; }
  bool is_uncountable() const { return !is_countable(); }

  friend bool operator==(const CardinalSpec&, const CardinalSpec&) = default;
  friend auto operator<=>(const CardinalSpec& a, const CardinalSpec& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    return a.is_finite() ? a.n <=> b.n : std::strong_ordering::equal;
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::finite:
        return std::to_string(n);
      case Kind::aleph0:
        return "aleph0";
      case Kind::uncountable:
        return "uncountable";
      case Kind::at_least_continuum:
        return "continuum+";
    }
    return "?";
  }
};

/// An ordinal kappa > 0: finite, or infinite with or without countable
/// cofinality. Finite ordinals are never asked about cofinality; their
/// vertex set is finite, which already separates.
struct OrdinalSpec {
  enum class Kind { finite, countable_cofinality, not_countable_cofinality };
  Kind kind = Kind::finite;
  std::uint64_t n = 1;

  static OrdinalSpec finite(std::uint64_t n) {
    if (n == 0) throw GraphError("finite ordinal parameter must be at least 1");
    return {Kind::finite, n};
  }
  static OrdinalSpec countable_cofinality() { return {Kind::countable_cofinality, 0}; }
  static OrdinalSpec not_countable_cofinality() {
    return {Kind::not_countable_cofinality, 0};
  }

  bool is_finite() const { return kind == Kind::finite; }

  friend bool operator==(const OrdinalSpec&, const OrdinalSpec&) = default;

  std::string to_string() const {
    switch (kind) {
      case Kind::finite:
        return std::to_string(n);
      case Kind::countable_cofinality:
        return "cofinal-omega";
      case Kind::not_countable_cofinality:
        return "non-cofinal-omega";
    }
    return "?";
  }
};

class FamilyDescriptor {
 public:
  using Param = std::variant<CardinalSpec, OrdinalSpec>;

  /// E_kappa takes an OrdinalSpec, every other family a CardinalSpec.
  FamilyDescriptor(FamilyKind kind, Param param) : kind_(kind), param_(param) {
    const bool ordinal = std::holds_alternative<OrdinalSpec>(param_);
    if (ordinal != (kind_ == FamilyKind::E_kappa)) {
      throw GraphError(std::string(pathalg::to_string(kind_)) +
                       (ordinal ? " takes a cardinal parameter"
                                : " takes an ordinal parameter"));
    }
  }

  FamilyKind kind() const { return kind_; }
  const Param& param() const { return param_; }
  const CardinalSpec& cardinal() const { return std::get<CardinalSpec>(param_); }
  const OrdinalSpec& ordinal() const { return std::get<OrdinalSpec>(param_); }

  bool is_finite() const {
    return std::visit([](const auto& p) { return p.is_finite(); }, param_);
  }
  std::uint64_t finite_size() const {
    if (!is_finite()) throw UnsupportedFamily("parameter is not finite");
    return std::visit([](const auto& p) { return p.n; }, param_);
  }

  /// The same family truncated to a finite parameter n.
  FamilyDescriptor truncated(std::uint64_t n) const {
    if (kind_ == FamilyKind::E_kappa) return {kind_, OrdinalSpec::finite(n)};
    return {kind_, CardinalSpec::finite(n)};
  }

  std::string to_string() const {
    return std::string(pathalg::to_string(kind_)) + "(" +
           std::visit([](const auto& p) { return p.to_string(); }, param_) + ")";
  }

  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;

 private:
  FamilyKind kind_;
  Param param_;
};

struct GenerationLimits {
  std::size_t max_vertices = 4096;
};

namespace detail {

inline std::string subset_label(std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (unsigned i = 0; i < 64; ++i) {
    if ((mask >> i) & 1U) {
      if (!first) out += ",";
      first = false;
      out += std::to_string(i + 1);
    }
  }
  return out + "}";
}

// Masks over {1..n} ordered by size, then lexicographically by elements.
inline std::vector<std::uint64_t> ordered_subsets(std::uint64_t n, bool include_empty) {
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = include_empty ? 0 : 1; m < (std::uint64_t{1} << n); ++m) {
    masks.push_back(m);
  }
  auto elements = [](std::uint64_t m) {
    std::vector<int> e;
    for (int i = 0; i < 64; ++i) {
      if ((m >> i) & 1U) e.push_back(i);
    }
    return e;
  };
  std::sort(masks.begin(), masks.end(), [&](std::uint64_t a, std::uint64_t b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return elements(a) < elements(b);
  });
  return masks;
}

inline Graph subset_graph(std::uint64_t n, bool include_empty, std::uint64_t loops) {
  const auto masks = ordered_subsets(n, include_empty);
  Graph g;
  for (auto m : masks) g.add_vertex(subset_label(m));
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = 0; j < masks.size(); ++j) {
      const bool proper = i != j && (masks[i] & ~masks[j]) == 0;
      if (proper) g.add_edge(i, j);
    }
    if (loops > 0) g.add_edge(i, i, Multiplicity::finite(loops));
  }
  return g;
}

}  // namespace detail

/// Concrete graph for a family with a finite parameter.
inline Graph generate_finite(const FamilyDescriptor& desc,
                             const GenerationLimits& limits = {}) {
  if (!desc.is_finite()) {
    throw UnsupportedFamily(desc.to_string() + " has no finite presentation");
  }
  const std::uint64_t n = desc.finite_size();
  std::uint64_t vertices = 0;
  if (desc.kind() == FamilyKind::E_kappa) {
    vertices = n;
  } else if (n >= 63) {
    vertices = UINT64_MAX;
  } else {
    vertices = (std::uint64_t{1} << n) - (desc.kind() == FamilyKind::E_P ? 0 : 1);
  }
  if (vertices > limits.max_vertices) {
    throw CapExceeded(desc.to_string() + " would have " +
                      (vertices == UINT64_MAX ? std::string("2^") + std::to_string(n)
                                              : std::to_string(vertices)) +
                      " vertices, above the cap of " +
                      std::to_string(limits.max_vertices));
  }

  switch (desc.kind()) {
    case FamilyKind::E_A:
      return detail::subset_graph(n, false, 0);
    case FamilyKind::E_L:
      return detail::subset_graph(n, false, 1);
    case FamilyKind::E_K:
      return detail::subset_graph(n, false, 2);
    case FamilyKind::E_P:
      return detail::subset_graph(n, true, 0);
    case FamilyKind::E_kappa: {
      Graph g;
      for (std::uint64_t a = 0; a < n; ++a) g.add_vertex(std::to_string(a));
      for (std::uint64_t a = 0; a < n; ++a) {
        for (std::uint64_t b = a + 1; b < n; ++b) g.add_edge(a, b);
      }
      return g;
    }
  }
  throw UnsupportedFamily("unknown family");
}

/// Classification of a family member from its parameter alone.
inline PropertyReport symbolic_classify(const FamilyDescriptor& desc) {
  PropertyReport r;
  auto& why = r.witnesses;
  const FamilyKind kind = desc.kind();

  r.downward_directed = true;
  switch (kind) {
    case FamilyKind::E_A:
    case FamilyKind::E_L:
    case FamilyKind::E_K:
      why["downward_directed"] =
          "vertices A and A' both emit an edge to the finite set A u A'";
      break;
    case FamilyKind::E_P:
      why["downward_directed"] = "every vertex reaches the top vertex X";
      break;
    case FamilyKind::E_kappa:
      why["downward_directed"] = "ordinals a and b both reach max(a, b)";
      break;
  }

  r.acyclic = kind == FamilyKind::E_A || kind == FamilyKind::E_P ||
              kind == FamilyKind::E_kappa;
  why["acyclic"] = r.acyclic ? "every edge goes to a strictly larger vertex"
                             : "every vertex carries a loop";

  // Condition (L)
  switch (kind) {
    case FamilyKind::E_L:
      r.condition_L = !desc.cardinal().is_finite();
      why["condition_L"] =
          r.condition_L
              ? "X is infinite: the loop at A exits along A -> A u {x} for x not in A"
              : "X is finite: the loop at the top vertex X has no exit";
      break;
    case FamilyKind::E_K:
      r.condition_L = true;
      why["condition_L"] = "the two loops at each vertex are exits for each other";
      break;
    default:
      r.condition_L = true;
      why["condition_L"] = "acyclic, so vacuous";
      break;
  }

  // Condition (K)
  switch (kind) {
    case FamilyKind::E_L:
      r.condition_K = false;
      why["condition_K"] = "the single loop is the only simple cycle at each vertex";
      break;
    case FamilyKind::E_K:
      r.condition_K = true;
      why["condition_K"] = "the two loops are the only simple cycles at each vertex";
      break;
    default:
      r.condition_K = true;
      why["condition_K"] = "acyclic, so vacuous";
      break;
  }

  // Countable separation property
  switch (kind) {
    case FamilyKind::E_P:
      r.csp = true;
      why["csp"] = "every vertex emits an edge to the top vertex X; take {X}";
      break;
    case FamilyKind::E_kappa:
      r.csp = desc.ordinal().kind != OrdinalSpec::Kind::not_countable_cofinality;
      why["csp"] =
          desc.ordinal().is_finite()
              ? "finite vertex set"
          : r.csp ? "kappa has countable cofinality: a countable cofinal sequence separates"
                  : "kappa lacks countable cofinality: any countable set of ordinals "
                    "is bounded below kappa, and vertices above the bound reach none of it";
      break;
    default:
      r.csp = desc.cardinal().is_countable();
      why["csp"] = r.csp ? "X countable, so the vertex set is countable"
                         : "X uncountable: a countable union of U(x) mentions only "
                           "countably many elements of X, so some vertex is missed";
      break;
  }

  // Cofinality. With finite X (or finite kappa) the graph is finite and
  // cofinal exactly when one vertex or one sink absorbs everything; with an
  // infinite parameter, infinite emitters sit at incomparable vertices.
  if (desc.is_finite()) {
    const auto n = desc.finite_size();
    switch (kind) {
      case FamilyKind::E_A:
      case FamilyKind::E_P:
      case FamilyKind::E_kappa:
        r.cofinal = true;
        why["cofinal"] = "finite and acyclic with a unique sink that every vertex reaches";
        break;
      case FamilyKind::E_L:
      case FamilyKind::E_K:
        r.cofinal = n == 1;
        why["cofinal"] = n == 1 ? "a single vertex"
                                : "the loop at {1} is not reached from {2}";
        break;
    }
  } else {
    r.cofinal = false;
    why["cofinal"] = kind == FamilyKind::E_kappa
                         ? "vertex 0 is an infinite emitter not reached from 1"
                         : "incomparable infinite emitters do not reach each other";
  }

  switch (kind) {
    case FamilyKind::E_L:
    case FamilyKind::E_K:
      r.af = TriState::no;
      why["af"] = "the graph contains a cycle";
      break;
    default:
      r.af = TriState::yes;
      why["af"] = "acyclic";
      break;
  }
  r.real_rank_zero = r.condition_K ? TriState::yes : TriState::unknown;

  derive_algebra_properties(r);
  why["cstar_prime"] = r.cstar_prime ? "Condition (L) and downward directed"
                                     : "Condition (L) fails";
  why["cstar_primitive"] =
      r.cstar_primitive ? "prime with the countable separation property"
      : r.cstar_prime   ? "prime, but the countable separation property fails"
                        : "not prime";
  return r;
}

/// Number of maximal ideals of C*(E), for E_A and E_K with infinite X, and
/// for E_L with |X| at least the continuum (where |X x T| = |X|).
inline CardinalSpec maximal_ideal_cardinality(const FamilyDescriptor& desc) {
  switch (desc.kind()) {
    case FamilyKind::E_A:
    case FamilyKind::E_K:
      if (desc.cardinal().is_finite()) {
        throw UnsupportedFamily(desc.to_string() +
                                ": finite parameters have a concrete lattice; "
                                "use maximal_proper_pairs on the generated graph");
      }
      return desc.cardinal();
    case FamilyKind::E_L:
      if (desc.cardinal().kind != CardinalSpec::Kind::at_least_continuum) {
        throw UnsupportedFamily(desc.to_string() +
                                ": maximal ideals are counted only for |X| >= 2^aleph0");
      }
      return desc.cardinal();
    default:
      throw UnsupportedFamily(desc.to_string() + ": no maximal ideal count");
  }
}

struct ConsistencyFinding {
  std::string field;
  std::string finite_value;
  std::string symbolic_value;
  bool expected = false;  // a legitimate finite-size divergence
};

/// Compares the classification of the size-n truncation against the
/// symbolic verdict for `desc`. Downward directedness, Condition (K) and
/// acyclicity do not depend on the size of X, so any disagreement there is a
/// discrepancy. Other fields may legitimately change with size and are
/// reported as expected divergences.
inline std::vector<ConsistencyFinding> consistency_check(const FamilyDescriptor& desc,
                                                         std::uint64_t n) {
  const PropertyReport finite = classify(generate_finite(desc.truncated(n)));
  const PropertyReport symbolic = symbolic_classify(desc);

  std::vector<ConsistencyFinding> findings;
  auto compare = [&](std::string field, bool a, bool b, bool strict) {
    if (a != b) {
      findings.push_back({std::move(field), std::string(yes_no(a)),
                          std::string(yes_no(b)), !strict});
    }
  };
  compare("downward_directed", finite.downward_directed, symbolic.downward_directed, true);
  compare("condition_K", finite.condition_K, symbolic.condition_K, true);
  compare("acyclic", finite.acyclic, symbolic.acyclic, true);
  compare("condition_L", finite.condition_L, symbolic.condition_L, false);
  compare("cofinal", finite.cofinal, symbolic.cofinal, false);
  compare("csp", finite.csp, symbolic.csp, false);
  compare("cstar_simple", finite.cstar_simple, symbolic.cstar_simple, false);
  compare("cstar_prime", finite.cstar_prime, symbolic.cstar_prime, false);
  compare("cstar_primitive", finite.cstar_primitive, symbolic.cstar_primitive, false);
  compare("lpa_prime", finite.lpa_prime, symbolic.lpa_prime, false);
  compare("lpa_primitive", finite.lpa_primitive, symbolic.lpa_primitive, false);
  return findings;
}

inline std::vector<ConsistencyFinding> discrepancies(
    const std::vector<ConsistencyFinding>& findings) {
  std::vector<ConsistencyFinding> out;
  for (const auto& f : findings) {
    if (!f.expected) out.push_back(f);
  }
  return out;
}

}  // namespace pathalg
