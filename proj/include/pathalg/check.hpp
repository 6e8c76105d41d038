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

// Self-check of every algorithm on one graph against the brute-force
// oracles and the structural invariants, and the bundled corpus it runs on.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pathalg/classify.hpp"
#include "pathalg/cycles.hpp"
#include "pathalg/families.hpp"
#include "pathalg/graph.hpp"
#include "pathalg/graph_text.hpp"
#include "pathalg/ideals.hpp"
#include "pathalg/oracle.hpp"
#include "pathalg/random_graph.hpp"
#include "pathalg/reachability.hpp"

namespace pathalg {

struct CheckOptions {
  /// Subset-enumerating oracles run only up to this many vertices.
  std::size_t brute_force_max_vertices = 10;
};

/// Descriptions of every failed check; empty when the graph passes.
inline std::vector<std::string> check_graph(const Graph& g, const CheckOptions& opts = {}) {
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };
  const std::size_t n = g.vertex_count();
  const bool brute = n <= opts.brute_force_max_vertices;
  const auto label = [&](std::size_t v) { return g.vertex(v).label; };

  // Reachability.
  std::vector<VertexSet> desc, anc;
  for (std::size_t v = 0; v < n; ++v) {
    desc.push_back(descendants(g, v));
    anc.push_back(ancestors(g, v));
  }
  const auto reach = oracle::reach_matrix(g);
  for (std::size_t v = 0; v < n; ++v) {
    expect(is_hereditary(g, desc[v]), "descendants(" + label(v) + ") not hereditary");
    for (std::size_t w = 0; w < n; ++w) {
      expect(desc[v].contains(w) == anc[w].contains(v),
             "descendants/ancestors disagree on " + label(v) + " >= " + label(w));
      expect(desc[v].contains(w) == reach[v][w],
             "descendants disagree with path oracle on " + label(v) + " >= " + label(w));
    }
  }
  expect(is_downward_directed(g) == oracle::is_downward_directed(g),
         "downward directedness disagrees with oracle");
  expect(is_cofinal(g) == oracle::is_cofinal(g), "cofinality disagrees with oracle");

  // Saturation.
  std::vector<VertexSet> sat;
  for (std::size_t v = 0; v < n; ++v) {
    sat.push_back(saturate(g, desc[v]));
    const auto& s = sat.back();
    expect(desc[v].is_subset_of(s), "saturation not extensive at " + label(v));
    expect(saturate(g, s) == s, "saturation not idempotent at " + label(v));
    expect(is_hereditary(g, s) && is_saturated(g, s),
           "saturation of H(" + label(v) + ") not saturated hereditary");
    (s - desc[v]).for_each([&](std::size_t u) {
      expect(is_regular(g, u), "non-regular vertex " + label(u) + " added by saturation");
    });
    if (brute) {
      expect(s == oracle::least_saturated_hereditary_superset(g, desc[v]),
             "saturation of H(" + label(v) + ") disagrees with brute force");
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w) {
      if (desc[v].contains(w)) {
        expect(sat[w].is_subset_of(sat[v]),
               "saturation not monotone for H(" + label(w) + ") within H(" + label(v) + ")");
      }
      if (!desc[v].intersects(desc[w])) {
        expect(!sat[v].intersects(sat[w]),
               "disjoint H(" + label(v) + "), H(" + label(w) + ") have meeting saturations");
      }
    }
  }

  // Cycles.
  const bool cond_L = is_condition_L(g);
  const bool cond_K = is_condition_K(g);
  expect(cond_L == !oracle::has_exitless_cycle(g), "Condition (L) disagrees with oracle");
  for (std::size_t v = 0; v < n; ++v) {
    const auto count = simple_cycle_count_at(g, v);
    const auto expected = std::min<std::uint64_t>(oracle::simple_cycle_count(g, v), 2);
    expect(static_cast<std::uint64_t>(count) == expected,
           "simple cycle count at " + label(v) + " disagrees with oracle");
    const auto listed = enumerate_simple_cycles_at(g, v, 2, 3 * n).size();
    expect(listed == expected,
           "simple cycle enumeration at " + label(v) + " disagrees with oracle");
  }
  if (cond_K) expect(cond_L, "Condition (K) without Condition (L)");
  if (is_acyclic(g)) expect(cond_L && cond_K, "acyclic graph fails (L) or (K)");

  // Classification.
  const auto report = classify(g);
  for (const auto& v : implication_audit(report)) failures.push_back("audit: " + v);
  expect(report.cstar_prime == report.cstar_primitive,
         "prime and primitive differ on a finite graph");
  const auto chars = evaluate_saturation_characterizations(g);
  expect(chars.cofinal == chars.all_saturations_full,
         "cofinality disagrees with full saturations");
  expect(chars.downward_directed == chars.saturations_overlap,
         "downward directedness disagrees with overlapping saturations");

  // Lattice.
  if (brute) {
    const auto lattice = enumerate_saturated_hereditary(g, {.max_vertices = n, .force = true});
    auto reference = oracle::saturated_hereditary_family(g);
    std::sort(reference.begin(), reference.end());
    expect(lattice == reference, "saturated hereditary lattice disagrees with brute force");
    for (const auto& a : lattice) {
      for (const auto& b : lattice) {
        expect(std::find(lattice.begin(), lattice.end(), a & b) != lattice.end(),
               "lattice not closed under intersection");
      }
    }
    const auto pairs = admissible_pairs(g, {.max_vertices = n, .force = true});
    if (pairs.size() <= 64) {
      for (const auto& p : pairs) {
        expect(pair_leq(p, p), "pair order not reflexive");
        for (const auto& q : pairs) {
          if (pair_leq(p, q) && pair_leq(q, p)) expect(p == q, "pair order not antisymmetric");
          for (const auto& r : pairs) {
            if (pair_leq(p, q) && pair_leq(q, r)) {
              expect(pair_leq(p, r), "pair order not transitive");
            }
          }
        }
      }
    }
  }

  // Serialization.
  const auto text = serialize_graph(g);
  const auto reparsed = parse_graph(text);
  expect(reparsed == g, "parse(serialize(g)) differs from g");
  expect(serialize_graph(reparsed) == text, "serialization not stable");

  std::sort(failures.begin(), failures.end());
  failures.erase(std::unique(failures.begin(), failures.end()), failures.end());
  return failures;
}

struct CorpusEntry {
  std::string name;
  Graph graph;
};

inline constexpr std::uint64_t kDefaultCorpusSeed = 20260101;

/// Every family truncation with parameter 1..3 followed by `random_count`
/// seeded random graphs of at most 6 vertices with multiplicities 1, 2, omega.
inline std::vector<CorpusEntry> bundled_corpus(std::uint64_t seed = kDefaultCorpusSeed,
                                               std::size_t random_count = 500) {
  std::vector<CorpusEntry> corpus;
  for (auto kind : {FamilyKind::E_A, FamilyKind::E_L, FamilyKind::E_K, FamilyKind::E_P,
                    FamilyKind::E_kappa}) {
    for (std::uint64_t n = 1; n <= 3; ++n) {
      const FamilyDescriptor desc =
          kind == FamilyKind::E_kappa ? FamilyDescriptor(kind, OrdinalSpec::finite(n))
                                      : FamilyDescriptor(kind, CardinalSpec::finite(n));
      corpus.push_back({desc.to_string(), generate_finite(desc)});
    }
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) {
    corpus.push_back({"random#" + std::to_string(i), random_graph(rng)});
  }
  return corpus;
}

}  // namespace pathalg
