// SPDX-License-Identifier: Apache-2.0
//
// pucodes: paraunitary complementary sequence toolkit
// Copyright (C) 2026 The pucodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Three mutually orthogonal ternary complementary sets from the 3 x 3 DFT.

#include <iostream>
#include <vector>

#include "pucodes/pucodes.hpp"

int main() {
  using namespace pucodes;
  const auto f = dft_matrix(3).matrix;
  GeneratorSpec<Cyclotomic> g;
  g.unitaries.assign(3, f);
  g.delays = StandardDelays{{0, 1}};

  std::vector<SequenceSet<Cyclotomic>> sets;
  for (std::size_t r = 0; r < 3; ++r) sets.push_back(recursive_generate(g, r));

  // print exponents of w = exp(2 pi i / 3)
  for (const auto& set : sets) {
    std::cout << "set " << set.set_index << '\n';
    for (const auto& seq : set.sequences) {
      std::cout << "  ";
      for (const auto& v : seq) std::cout << root_exponent(v).value_or(-1) << ' ';
      std::cout << '\n';
    }
  }
  const auto report = ccc_check(sets);
  std::cout << "complete complementary code: " << (report.passed ? "yes" : "no")
            << ", C = " << canonical_text(*report.constant) << '\n';
}
