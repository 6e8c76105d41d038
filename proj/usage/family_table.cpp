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


// Prints the symbolic verdicts for every family at every parameter class.

#include <cstdio>
#include <vector>

#include "pathalg/pathalg.hpp"

int main() {
  using namespace pathalg;
  std::vector<FamilyDescriptor> families;
  for (auto kind : {FamilyKind::E_A, FamilyKind::E_L, FamilyKind::E_K, FamilyKind::E_P}) {
    for (auto c : {CardinalSpec::finite(3), CardinalSpec::aleph0(), CardinalSpec::uncountable(),
                   CardinalSpec::at_least_continuum()}) {
      families.emplace_back(kind, c);
    }
  }
  for (auto o : {OrdinalSpec::finite(3), OrdinalSpec::countable_cofinality(),
                 OrdinalSpec::not_countable_cofinality()}) {
    families.emplace_back(FamilyKind::E_kappa, o);
  }

  std::printf("%-28s %-7s %-7s %-10s %-4s\n", "family", "simple", "prime", "primitive", "af");
  for (const auto& d : families) {
    const auto r = symbolic_classify(d);
    std::printf("%-28s %-7s %-7s %-10s %-4s\n", d.to_string().c_str(),
                yes_no(r.cstar_simple).data(), yes_no(r.cstar_prime).data(),
                yes_no(r.cstar_primitive).data(), to_string(r.af).data());
  }
}
