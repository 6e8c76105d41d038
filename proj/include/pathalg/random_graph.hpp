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

// Seeded random multigraphs for property tests and the corpus checker.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pathalg/graph.hpp"
#include "pathalg/vertex_set.hpp"

namespace pathalg {

struct RandomGraphOptions {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 6;
  /// Multiplicities drawn uniformly from this list.
  std::vector<Multiplicity> multiplicities = {
      Multiplicity::finite(1), Multiplicity::finite(2), Multiplicity::omega()};
  /// Probability of an edge group on each ordered pair (loops included),
  /// itself drawn uniformly from [min_density, max_density] per graph so the
  /// corpus mixes sparse and dense graphs.
  double min_density = 0.05;
  double max_density = 0.5;
};

inline Graph random_graph(std::mt19937_64& rng, const RandomGraphOptions& opts = {}) {
  std::uniform_int_distribution<std::size_t> size(opts.min_vertices, opts.max_vertices);
  std::uniform_real_distribution<double> density(opts.min_density, opts.max_density);
  std::uniform_int_distribution<std::size_t> mult(0, opts.multiplicities.size() - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  const std::size_t n = size(rng);
  const double p = density(rng);
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (coin(rng) < p) g.add_edge(s, t, opts.multiplicities[mult(rng)]);
    }
  }
  return g;
}

/// Each vertex independently with probability 1/2.
inline VertexSet random_subset(std::mt19937_64& rng, std::size_t universe) {
  std::bernoulli_distribution coin(0.5);
  VertexSet s(universe);
  for (std::size_t v = 0; v < universe; ++v) {
    if (coin(rng)) s.insert(v);
  }
  return s;
}

}  // namespace pathalg
