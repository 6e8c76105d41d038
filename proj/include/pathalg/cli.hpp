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

// Command surface of the `pathalg` tool. `run` takes the arguments after the
// program name and writes to the given streams, so tests drive it directly.

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pathalg/check.hpp"
#include "pathalg/classify.hpp"
#include "pathalg/families.hpp"
#include "pathalg/graph.hpp"
#include "pathalg/graph_text.hpp"
#include "pathalg/ideals.hpp"
#include "pathalg/report_text.hpp"

namespace pathalg::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInput = 2,
  kCap = 3,
  kViolation = 4,
};

/// Bad command-line values; reported with exit code 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Unreadable files; reported with exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

inline FamilyKind parse_family_kind(const std::string& s) {
  if (s == "eA") return FamilyKind::E_A;
  if (s == "eL") return FamilyKind::E_L;
  if (s == "eK") return FamilyKind::E_K;
  if (s == "eP") return FamilyKind::E_P;
  if (s == "eKappa") return FamilyKind::E_kappa;
  throw UsageError("unknown family '" + s + "' (expected eA, eL, eK, eP or eKappa)");
}

/// `--param` values: a positive integer, `aleph0`, `uncountable` or
/// `continuum+` for cardinals; a positive integer, `cofinal-omega` or
/// `non-cofinal-omega` for eKappa.
inline FamilyDescriptor parse_family(const std::string& family, const std::string& param) {
  const FamilyKind kind = parse_family_kind(family);
  std::uint64_t n = 0;
  auto [ptr, ec] = std::from_chars(param.data(), param.data() + param.size(), n);
  const bool numeric = ec == std::errc() && ptr == param.data() + param.size();
  if (numeric && n == 0) throw UsageError("finite parameter must be at least 1");
  if (kind == FamilyKind::E_kappa) {
    if (numeric) return {kind, OrdinalSpec::finite(n)};
    if (param == "cofinal-omega") return {kind, OrdinalSpec::countable_cofinality()};
    if (param == "non-cofinal-omega") return {kind, OrdinalSpec::not_countable_cofinality()};
    throw UsageError("bad eKappa parameter '" + param +
                     "' (expected n, cofinal-omega or non-cofinal-omega)");
  }
  if (numeric) return {kind, CardinalSpec::finite(n)};
  if (param == "aleph0") return {kind, CardinalSpec::aleph0()};
  if (param == "uncountable") return {kind, CardinalSpec::uncountable()};
  if (param == "continuum+") return {kind, CardinalSpec::at_least_continuum()};
  throw UsageError("bad cardinal parameter '" + param +
                   "' (expected n, aleph0, uncountable or continuum+)");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Graph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

inline std::string render_lattice(const Graph& g, const LatticeLimits& limits) {
  const auto sets = enumerate_saturated_hereditary(g, limits);
  const auto pairs = admissible_pairs(g, limits);
  const auto maximal = maximal_proper_pairs(g, limits);
  std::string out;
  out += "saturated_hereditary_sets: " + std::to_string(sets.size()) + "\n";
  for (const auto& h : sets) {
    out += "  " + format_set(g, h) + " breaking " + format_set(g, breaking_vertices(g, h)) +
           "\n";
  }
  out += "admissible_pairs: " + std::to_string(pairs.size()) + "\n";
  for (const auto& p : pairs) out += "  " + format_pair(g, p) + "\n";
  out += "maximal_proper_pairs: " + std::to_string(maximal.size()) + "\n";
  for (const auto& p : maximal) out += "  " + format_pair(g, p) + "\n";
  return out;
}

/// Hasse diagram of the admissible pairs under the pair order.
inline std::string render_lattice_dot(const Graph& g, const LatticeLimits& limits) {
  const auto pairs = admissible_pairs(g, limits);
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::string out = "digraph lattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out += "  p" + std::to_string(i) + " [label=" + quote(format_pair(g, pairs[i])) + "];\n";
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (i == j || !pair_leq(pairs[i], pairs[j])) continue;
      bool covers = true;
      for (std::size_t k = 0; k < pairs.size() && covers; ++k) {
        if (k != i && k != j && pair_leq(pairs[i], pairs[k]) && pair_leq(pairs[k], pairs[j])) {
          covers = false;
        }
      }
      if (covers) out += "  p" + std::to_string(i) + " -> p" + std::to_string(j) + ";\n";
    }
  }
  return out + "}\n";
}

struct CheckSubject {
  std::string name;
  Graph graph;
};

inline std::vector<CheckSubject> check_subjects(const std::string& path, std::uint64_t seed,
                                                std::size_t random_count) {
  std::vector<CheckSubject> subjects;
  if (path.empty()) {
    for (auto& e : bundled_corpus(seed, random_count)) {
      subjects.push_back({std::move(e.name), std::move(e.graph)});
    }
    return subjects;
  }
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_directory(path, ec)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".g") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) subjects.push_back({f.string(), load_graph(f.string())});
    return subjects;
  }
  subjects.push_back({path, load_graph(path)});
  return subjects;
}

/// Strict disagreements between the symbolic table and the truncations
/// n = 1..3 of every family at each of its parameters.
inline std::vector<std::string> family_consistency_violations() {
  std::vector<FamilyDescriptor> descs;
  for (auto kind : {FamilyKind::E_A, FamilyKind::E_L, FamilyKind::E_K, FamilyKind::E_P}) {
    for (auto c : {CardinalSpec::aleph0(), CardinalSpec::uncountable(),
                   CardinalSpec::at_least_continuum()}) {
      descs.emplace_back(kind, c);
    }
  }
  descs.emplace_back(FamilyKind::E_kappa, OrdinalSpec::countable_cofinality());
  descs.emplace_back(FamilyKind::E_kappa, OrdinalSpec::not_countable_cofinality());
  std::vector<std::string> out;
  for (const auto& d : descs) {
    for (std::uint64_t n = 1; n <= 3; ++n) {
      for (const auto& f : discrepancies(consistency_check(d, n))) {
        out.push_back(d.to_string() + " vs n=" + std::to_string(n) + ": " + f.field +
                      " finite=" + f.finite_value + " symbolic=" + f.symbolic_value);
      }
    }
  }
  return out;
}

/// Prints the sorted violations and the totals; exit code 4 if any.
inline int report_check(std::vector<std::string> violations, std::size_t checked,
                        std::ostream& out) {
  std::sort(violations.begin(), violations.end());
  for (const auto& v : violations) out << "violation: " << v << "\n";
  out << "checked: " << checked << "\n";
  out << "violations: " << violations.size() << "\n";
  return violations.empty() ? kOk : kViolation;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ideal structure and simplicity of graph algebras", "pathalg"};
  app.require_subcommand(1);

  std::string file, output, family, param;
  bool dot = false, force = false;
  std::size_t max_vertices = kDefaultLatticeCap;
  std::size_t generate_cap = GenerationLimits{}.max_vertices;
  std::uint64_t seed = kDefaultCorpusSeed;
  std::size_t random_count = 500;

  auto* analyze = app.add_subcommand("analyze", "Classify the graph in a file");
  analyze->add_option("file", file, "Graph document")->required();

  auto* lattice = app.add_subcommand(
      "lattice", "List saturated hereditary sets, admissible pairs and maximal proper pairs");
  lattice->add_option("file", file, "Graph document")->required();
  lattice->add_flag("--dot", dot, "Print the pair lattice as a DOT digraph");
  lattice->add_option("--max-vertices", max_vertices, "Lattice enumeration cap");
  lattice->add_flag("--force", force, "Enumerate above the cap (up to 62 vertices)");

  auto* generate = app.add_subcommand("generate", "Write a finite family member");
  generate->add_option("--family", family, "eA|eL|eK|eP|eKappa")->required();
  generate->add_option("--param", param, "Finite parameter n")->required();
  generate->add_option("-o,--output", output, "Output file (default stdout)");
  generate->add_option("--max-vertices", generate_cap, "Generation cap");

  auto* symbolic = app.add_subcommand("symbolic", "Classify a family member from its parameter");
  symbolic->add_option("--family", family, "eA|eL|eK|eP|eKappa")->required();
  symbolic->add_option("--param", param,
                       "n|aleph0|uncountable|continuum+ (eKappa: n|cofinal-omega|"
                       "non-cofinal-omega)")
      ->required();

  auto* check = app.add_subcommand(
      "check", "Run the oracle and invariant suite on a file, a directory of .g files, "
               "or the bundled corpus");
  check->add_option("path", file, "Graph document or directory (default: bundled corpus)");
  check->add_option("--seed", seed, "Seed for the random part of the bundled corpus");
  check->add_option("--random-count", random_count, "Random graphs in the bundled corpus");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*analyze) {
      const Graph g = load_graph(file);
      const auto report = classify(g);
      out << render_report(report, file) << "\n" << render_summary_table(report);
    } else if (*lattice) {
      const Graph g = load_graph(file);
      const LatticeLimits limits{max_vertices, force};
      out << (dot ? render_lattice_dot(g, limits) : render_lattice(g, limits));
    } else if (*generate) {
      const auto desc = parse_family(family, param);
      if (!desc.is_finite()) throw UsageError("generate needs a finite --param");
      const auto text = serialize_graph(generate_finite(desc, {generate_cap}));
      if (output.empty()) {
        out << text;
      } else {
        std::ofstream f(output, std::ios::binary);
        if (!f || !(f << text)) throw InputError("cannot write '" + output + "'");
      }
    } else if (*symbolic) {
      const auto desc = parse_family(family, param);
      auto report = symbolic_classify(desc);
      try {
        report.witnesses["maximal_ideals"] =
            "|Max| = " + maximal_ideal_cardinality(desc).to_string();
      } catch (const UnsupportedFamily&) {
      }
      out << render_report(report, desc.to_string()) << "\n" << render_summary_table(report);
    } else if (*check) {
      const auto subjects = check_subjects(file, seed, random_count);
      std::vector<std::string> violations;
      for (const auto& s : subjects) {
        for (const auto& f : check_graph(s.graph)) violations.push_back(s.name + ": " + f);
      }
      if (file.empty()) {
        for (auto& v : family_consistency_violations()) violations.push_back(std::move(v));
      }
      return report_check(std::move(violations), subjects.size(), out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }
  return kOk;
}

}  // namespace pathalg::cli
