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


// Builds a small graph in code, classifies it, and lists its ideal lattice.

#include <iostream>

#include "pathalg/pathalg.hpp"

int main() {
  using namespace pathalg;
  Graph g;
  const auto v = g.add_vertex("v");
  const auto w = g.add_vertex("w");
  g.add_edge(v, w, Multiplicity::omega());
  g.add_edge(v, v);

  const auto report = classify(g);
  std::cout << render_report(report, "v -(omega)-> w, loop at v") << "\n"
            << render_summary_table(report) << "\n";

  for (const auto& h : enumerate_saturated_hereditary(g)) {
    std::cout << "saturated hereditary " << format_set(g, h) << ", breaking vertices "
              << format_set(g, breaking_vertices(g, h)) << "\n";
  }
  for (const auto& p : maximal_proper_pairs(g)) {
    std::cout << "maximal proper pair " << format_pair(g, p) << "\n";
  }
}
