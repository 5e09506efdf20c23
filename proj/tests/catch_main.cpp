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

// Test runner. "--seed N" is accepted as an alias of Catch2's
// "--rng-seed N"; without either the seed is fixed so runs repeat.

#include <cstring>
#include <string>
#include <vector>

#include <catch_amalgamated.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  bool seeded = false;
  for (auto& a : args) {
    if (a == "--seed") a = "--rng-seed";
    if (a.rfind("--seed=", 0) == 0) a = "--rng-seed=" + a.substr(7);
    seeded = seeded || a.rfind("--rng-seed", 0) == 0;
  }
  if (!seeded) {
    args.emplace_back("--rng-seed");
    args.emplace_back("20260917");
  }
  std::vector<char*> ptrs;
  for (auto& a : args) ptrs.push_back(a.data());
  return Catch::Session().run(static_cast<int>(ptrs.size()), ptrs.data());
}
