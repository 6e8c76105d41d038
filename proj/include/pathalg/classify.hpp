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

// Structure of C*(E) and L_K(E) read off from graph conditions:
//
//   C*(E) simple     <=> Condition (L) and cofinal
//   C*(E) prime      <=> Condition (L) and downward directed
//   C*(E) primitive  <=> prime and countable separation property
//   L_K(E) prime     <=> downward directed
//   L_K(E) primitive <=> C*(E) primitive
//
// AF and real rank zero are only asserted in the direction that is known
// (acyclic => AF, Condition (K) => real rank zero); otherwise "unknown".

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pathalg/cycles.hpp"
#include "pathalg/graph.hpp"
#include "pathalg/ideals.hpp"
#include "pathalg/reachability.hpp"

namespace pathalg {

enum class TriState { yes, no, unknown };

inline std::string_view to_string(TriState t) {
  switch (t) {
    case TriState::yes:
      return "yes";
    case TriState::no:
      return "no";
    case TriState::unknown:
      return "unknown";
  }
  return "?";
}

inline std::string_view yes_no(bool b) { return b ? "yes" : "no"; }

struct PropertyReport {
  bool condition_L = false;
  bool condition_K = false;
  bool downward_directed = false;
  bool cofinal = false;
  bool csp = false;
  bool acyclic = false;
  bool cstar_simple = false;
  bool cstar_prime = false;
  bool cstar_primitive = false;
  bool lpa_prime = false;
  bool lpa_primitive = false;
  TriState af = TriState::unknown;
  TriState real_rank_zero = TriState::unknown;
  bool all_ideals_gauge_invariant = false;
  /// Counterexamples for failed properties, or the justification of a
  /// symbolic verdict, keyed by field name.
  std::map<std::string, std::string> witnesses;
};

/// Fills the algebra-level fields from the graph-level ones.
inline void derive_algebra_properties(PropertyReport& r) {
  r.cstar_simple = r.condition_L && r.cofinal;
  r.cstar_prime = r.condition_L && r.downward_directed;
  r.cstar_primitive = r.cstar_prime && r.csp;
  r.lpa_prime = r.downward_directed;
  r.lpa_primitive = r.cstar_primitive;
  r.all_ideals_gauge_invariant = r.condition_K;
}

/// The implication chain every report must satisfy. Empty when consistent.
inline std::vector<std::string> implication_audit(const PropertyReport& r) {
  std::vector<std::string> violations;
  if (r.cstar_simple && !r.cstar_primitive) {
    violations.push_back("C*(E) simple but not primitive");
  }
  if (r.cstar_primitive && !r.cstar_prime) {
    violations.push_back("C*(E) primitive but not prime");
  }
  if (r.cstar_prime && !r.lpa_prime) {
    violations.push_back("C*(E) prime but L_K(E) not prime");
  }
  if (r.lpa_primitive != r.cstar_primitive) {
    violations.push_back("L_K(E) and C*(E) disagree on primitivity");
  }
  if (r.cofinal && !r.downward_directed) {
    violations.push_back("cofinal but not downward directed");
  }
  return violations;
}

inline PropertyReport classify(const Graph& g) {
  PropertyReport r;
  auto& w = r.witnesses;

  if (auto c = find_cycle_without_exit(g)) {
    w["condition_L"] = "cycle without exit: " + format_cycle(g, *c);
  } else {
    r.condition_L = true;
  }

  if (auto v = find_single_cycle_vertex(g)) {
    w["condition_K"] = "vertex " + g.vertex(*v).label +
                       " is the base of exactly one simple cycle";
  } else {
    r.condition_K = true;
  }

  if (auto p = find_undirected_pair(g)) {
    w["downward_directed"] = "no common descendant of " +
                             g.vertex(p->first).label + " and " +
                             g.vertex(p->second).label;
  } else {
    r.downward_directed = true;
  }

  if (auto f = find_cofinality_failure(g)) {
    const auto& from = g.vertex(f->from).label;
    const auto& to = g.vertex(f->target).label;
    w["cofinal"] = f->target_is_cycle
                       ? from + " reaches no vertex of the cycle through " + to
                       : from + " does not reach singular vertex " + to;
  } else {
    r.cofinal = true;
  }

  r.csp = has_csp(g);
  w["csp"] = "separating set X = E^0 (" + std::to_string(g.vertex_count()) +
             " vertices)";

  r.acyclic = is_acyclic(g);
  r.af = r.acyclic ? TriState::yes : TriState::unknown;
  r.real_rank_zero = r.condition_K ? TriState::yes : TriState::unknown;

  derive_algebra_properties(r);
  return r;
}

/// Outcome of evaluating both sides of the saturation characterizations.
struct CharacterizationCheck {
  bool cofinal = false;
  bool all_saturations_full = false;  // sat(H(v)) = E^0 for every v
  bool downward_directed = false;
  bool saturations_overlap = false;   // sat(H(v)) meets sat(H(w)) for all v, w

  bool holds() const {
    return cofinal == all_saturations_full &&
           downward_directed == saturations_overlap;
  }
};

inline CharacterizationCheck evaluate_saturation_characterizations(const Graph& g) {
  CharacterizationCheck c;
  c.cofinal = is_cofinal(g);
  c.downward_directed = is_downward_directed(g);

  std::vector<VertexSet> sat;
  sat.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    sat.push_back(saturate(g, descendants(g, v)));
  }
  c.all_saturations_full = true;
  for (const auto& s : sat) c.all_saturations_full = c.all_saturations_full && s.full();
  c.saturations_overlap = true;
  for (std::size_t v = 0; v < sat.size() && c.saturations_overlap; ++v) {
    for (std::size_t u = v + 1; u < sat.size(); ++u) {
      if (!sat[v].intersects(sat[u])) {
        c.saturations_overlap = false;
        break;
      }
    }
  }
  return c;
}

/// True iff cofinality matches "every sat(H(v)) is E^0" and downward
/// directedness matches "all sat(H(v)) pairwise meet". The countable
/// separation characterization holds trivially for finite vertex sets.
inline bool check_saturation_characterizations(const Graph& g) {
  return evaluate_saturation_characterizations(g).holds();
}

}  // namespace pathalg
