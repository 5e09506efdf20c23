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

// pucodes generate|verify|correlate|catalog

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pucodes/cli/commands.hpp"

namespace {

std::optional<double> optional_tol(const CLI::Option* flag, double value) {
  if (flag->count() == 0) return std::nullopt;
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace pucodes::cli;

  CLI::App app{"Complementary sequence sets from paraunitary generating matrices"};
  app.require_subcommand(1);

  GenerateOptions gen;
  double gen_tol = 0;
  bool use_rmg = false;
  bool use_pu = false;
  auto* generate = app.add_subcommand("generate", "Generate sequence sets from a spec file");
  generate->add_option("spec", gen.spec_path, "Spec file (JSON)")->required();
  generate->add_option("-o,--out", gen.out_path, "Output file (.csv or .json); default stdout");
  generate->add_flag("--all-sets", gen.all_sets, "Write every set r to <stem>_r<r><ext>");
  generate->add_flag("--transpose", gen.transpose, "Take columns instead of rows (or vice versa)");
  auto* rmg_flag = generate->add_flag("--rmg", use_rmg, "Evaluate element-wise from radix-M digits");
  auto* pu_flag = generate->add_flag("--pu", use_pu, "Run the paraunitary recursion (default)");
  rmg_flag->excludes(pu_flag);
  auto* gen_tol_opt = generate->add_option("--tol", gen_tol, "Float tolerance for unitarity checks");

  VerifyOptions ver;
  double ver_tol = 0;
  auto* verify = app.add_subcommand("verify", "Check complementarity (or CCC with --ccc) of sequence files");
  verify->add_option("files", ver.paths, "Sequence files, one set each")->required();
  verify->add_flag("--ccc", ver.ccc, "Treat the files as the sets of a complete complementary code");
  auto* ver_tol_opt = verify->add_option("--tol", ver_tol, "Absolute tolerance for float kinds");
  verify->add_flag("--scale-tol", ver.scale_tol, "Scale the tolerance by L * max|x|^2");
  verify->add_option("--report", ver.report_path, "Write a JSON report ('-' for stdout)");

  CorrelateOptions cor;
  double cor_tol = 0;
  std::size_t port = 0;
  auto* correlate = app.add_subcommand("correlate", "Run the cascade matched filter over a sample file");
  correlate->add_option("spec", cor.spec_path, "Spec file (JSON)")->required();
  auto* port_opt = correlate->add_option("-p,--port", port, "Input port r (default: the spec's set_index)");
  correlate->add_option("-i,--input", cor.input_path, "Sample file")->required();
  correlate->add_option("-o,--out", cor.out_path, "Output file; default stdout");
  correlate->add_flag("--normalize", cor.normalize, "Divide outputs by C (complex output)");
  auto* cor_tol_opt = correlate->add_option("--tol", cor_tol, "Float tolerance for unitarity checks");

  CatalogOptions cat;
  auto* catalog = app.add_subcommand("catalog", "List the catalog or print one matrix");
  catalog->add_option("name", cat.name, "Catalog entry");
  catalog->add_option("-m,--size", cat.m, "Matrix size");
  catalog->add_option("--kind", cat.kind, "Scalar kind: gauss, eisenstein, complex, cyclo, cycloN");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (generate->parsed()) {
    gen.engine = use_rmg ? Engine::rmg : Engine::pu;
    gen.tol = optional_tol(gen_tol_opt, gen_tol);
    return run_generate(gen, std::cout, std::cerr);
  }
  if (verify->parsed()) {
    ver.tol = optional_tol(ver_tol_opt, ver_tol);
    return run_verify(ver, std::cout, std::cerr);
  }
  if (correlate->parsed()) {
    if (port_opt->count() > 0) cor.port = port;
    cor.tol = optional_tol(cor_tol_opt, cor_tol);
    return run_correlate(cor, std::cout, std::cerr);
  }
  return run_catalog(cat, std::cout, std::cerr);
}
