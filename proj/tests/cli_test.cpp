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


#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "pathalg/cli.hpp"

namespace pathalg {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return std::string(PATHALG_CORPUS_DIR) + "/" + name;
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

TEST(CliTest, AnalyzeSingleLoop) {
  const auto r = run({"analyze", fixture("single-loop.g")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "report_format: 1"));
  EXPECT_TRUE(has_line(r.out, "lpa_prime: yes"));
  EXPECT_TRUE(has_line(r.out, "cstar_prime: no"));
  EXPECT_TRUE(has_line(r.out, "witness.condition_L: cycle without exit: v -> v"));
  EXPECT_NE(r.out.find("L_K(E)"), std::string::npos);
}

TEST(CliTest, SymbolicUncountableSubsets) {
  const auto r = run({"symbolic", "--family", "eA", "--param", "uncountable"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "subject: E_A(uncountable)"));
  EXPECT_TRUE(has_line(r.out, "cstar_prime: yes"));
  EXPECT_TRUE(has_line(r.out, "cstar_primitive: no"));
  EXPECT_NE(r.out.find("witness.csp: "), std::string::npos);
  EXPECT_TRUE(has_line(r.out, "witness.maximal_ideals: |Max| = uncountable"));
}

TEST(CliTest, SymbolicOrdinals) {
  const auto r = run({"symbolic", "--family", "eKappa", "--param", "non-cofinal-omega"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "cstar_primitive: no"));
  EXPECT_TRUE(has_line(r.out, "af: yes"));
}

TEST(CliTest, LatticeOfBreakingFixture) {
  const auto r = run({"lattice", fixture("breaking.g")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "saturated_hereditary_sets: 3"));
  EXPECT_TRUE(has_line(r.out, "admissible_pairs: 4"));
  EXPECT_TRUE(has_line(r.out, "maximal_proper_pairs: 1"));
  EXPECT_TRUE(has_line(r.out, "  ({w}, {v})"));
  EXPECT_TRUE(has_line(r.out, "  {w} breaking {v}"));
}

TEST(CliTest, LatticeDot) {
  const auto r = run({"lattice", fixture("breaking.g"), "--dot"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("digraph lattice {", 0), 0u);
  EXPECT_NE(r.out.find("p1 -> p2;"), std::string::npos);
}

TEST(CliTest, LatticeCap) {
  const auto r = run({"lattice", fixture("breaking.g"), "--max-vertices", "1"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(run({"lattice", fixture("breaking.g"), "--max-vertices", "1", "--force"}).code, 0);
}

TEST(CliTest, GenerateRoundTrips) {
  const auto r = run({"generate", "--family", "eK", "--param", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, serialize_graph(generate_finite({FamilyKind::E_K, CardinalSpec::finite(2)})));

  const auto path = std::filesystem::temp_directory_path() / "pathalg_cli_test.g";
  ASSERT_EQ(run({"generate", "--family", "eKappa", "--param", "3", "-o", path.string()}).code, 0);
  const auto a = run({"analyze", path.string()});
  EXPECT_TRUE(has_line(a.out, "acyclic: yes"));
  std::filesystem::remove(path);
}

TEST(CliTest, GenerateCapAndInfiniteParameters) {
  EXPECT_EQ(run({"generate", "--family", "eA", "--param", "20"}).code, 3);
  EXPECT_EQ(run({"generate", "--family", "eA", "--param", "aleph0"}).code, 1);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"analyze"}).code, 1);
  EXPECT_EQ(run({"symbolic", "--family", "eZ", "--param", "3"}).code, 1);
  EXPECT_EQ(run({"symbolic", "--family", "eA", "--param", "huge"}).code, 1);
  EXPECT_EQ(run({"symbolic", "--family", "eA", "--param", "0"}).code, 1);
  EXPECT_EQ(run({"symbolic", "--family", "eKappa", "--param", "aleph0"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliTest, InputErrors) {
  EXPECT_EQ(run({"analyze", fixture("missing.g")}).code, 2);
  const auto path = std::filesystem::temp_directory_path() / "pathalg_bad.g";
  std::ofstream(path) << "vertex v\nedge v w\n";
  const auto r = run({"analyze", path.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(CliTest, CheckFixturesAndSmallCorpus) {
  const auto dir = run({"check", PATHALG_CORPUS_DIR});
  EXPECT_EQ(dir.code, 0) << dir.out;
  EXPECT_TRUE(has_line(dir.out, "violations: 0"));
  const auto small = run({"check", "--random-count", "20", "--seed", "7"});
  EXPECT_EQ(small.code, 0) << small.out;
  EXPECT_TRUE(has_line(small.out, "checked: 35"));
}

TEST(CliTest, CheckSingleFile) {
  const auto r = run({"check", fixture("single-loop.g")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "checked: 1"));
}

TEST(CliTest, ViolationsGiveExitCode4) {
  std::ostringstream out;
  EXPECT_EQ(cli::report_check({"b: second", "a: first"}, 2, out), 4);
  EXPECT_EQ(out.str(), "violation: a: first\nviolation: b: second\nchecked: 2\nviolations: 2\n");
}

}  // namespace
}  // namespace pathalg
