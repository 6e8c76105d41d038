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

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "pathalg/classify.hpp"

namespace pathalg {

inline constexpr int kReportFormatVersion = 1;

/// Field names and values of a report, in their fixed output order.
inline std::vector<std::pair<std::string, std::string>> report_fields(
    const PropertyReport& r) {
  auto b = [](bool v) { return std::string(yes_no(v)); };
  auto t = [](TriState v) { return std::string(to_string(v)); };
  return {
      {"condition_L", b(r.condition_L)},
      {"condition_K", b(r.condition_K)},
      {"downward_directed", b(r.downward_directed)},
      {"cofinal", b(r.cofinal)},
      {"csp", b(r.csp)},
      {"acyclic", b(r.acyclic)},
      {"cstar_simple", b(r.cstar_simple)},
      {"cstar_prime", b(r.cstar_prime)},
      {"cstar_primitive", b(r.cstar_primitive)},
      {"lpa_prime", b(r.lpa_prime)},
      {"lpa_primitive", b(r.lpa_primitive)},
      {"af", t(r.af)},
      {"real_rank_zero", t(r.real_rank_zero)},
      {"all_ideals_gauge_invariant", b(r.all_ideals_gauge_invariant)},
  };
}

/// Machine-readable part: `key: value` lines, witnesses as `witness.<key>`.
inline std::string render_report(const PropertyReport& r, const std::string& subject) {
  std::string out = "report_format: " + std::to_string(kReportFormatVersion) + "\n";
  out += "subject: " + subject + "\n";
  for (const auto& [k, v] : report_fields(r)) out += k + ": " + v + "\n";
  for (const auto& [k, v] : r.witnesses) out += "witness." + k + ": " + v + "\n";
  return out;
}

/// Side-by-side comparison of L_K(E) and C*(E) with the graph conditions
/// that decide each row.
inline std::string render_summary_table(const PropertyReport& r) {
  auto cell = [](bool v) { return std::string(yes_no(v)); };
  auto cond = [](const char* name, bool v) {
    return std::string(name) + "=" + std::string(yes_no(v));
  };
  const std::string L = cond("condition(L)", r.condition_L);
  struct Row {
    const char* name;
    std::string lpa, cstar, conditions;
  };
  const std::vector<Row> rows = {
      {"simple", cell(r.cstar_simple), cell(r.cstar_simple),
       cond("cofinal", r.cofinal) + ", " + L},
      {"prime", cell(r.lpa_prime), cell(r.cstar_prime),
       cond("downward_directed", r.downward_directed) + ", " + L},
      {"primitive", cell(r.lpa_primitive), cell(r.cstar_primitive),
       cond("downward_directed", r.downward_directed) + ", " + L + ", " +
           cond("csp", r.csp)},
  };
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-10s %-7s %-7s %s\n", "", "L_K(E)", "C*(E)",
                "graph conditions");
  out += buf;
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%-10s %-7s %-7s %s\n", row.name, row.lpa.c_str(),
                  row.cstar.c_str(), row.conditions.c_str());
    out += buf;
  }
  return out;
}

}  // namespace pathalg
