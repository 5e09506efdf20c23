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

// Subcommands of the pucodes tool, callable in-process.
//
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 usage, parse or validation error.

#pragma once

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "pucodes/constellations.hpp"
#include "pucodes/correlation.hpp"
#include "pucodes/correlator.hpp"
#include "pucodes/errors.hpp"
#include "pucodes/generator.hpp"
#include "pucodes/io/json_codec.hpp"
#include "pucodes/io/literal.hpp"
#include "pucodes/io/sequence_file.hpp"
#include "pucodes/io/spec_file.hpp"
#include "pucodes/scalar.hpp"

namespace pucodes::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kReportVersion = 1;

/// Explicit value, else $PUCODES_TOL, else the library default.
inline double resolve_tolerance(std::optional<double> flag) {
  if (flag) {
    if (!(*flag >= 0.0)) throw Error(ErrorCode::parse_error, "tolerance must be >= 0");
    return *flag;
  }
  if (const char* env = std::getenv("PUCODES_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v >= 0.0)) {
      throw Error(ErrorCode::parse_error, std::string("bad PUCODES_TOL value '") + env + "'");
    }
    return v;
  }
  return kDefaultTolerance;
}

namespace detail {

template <class F>
int guarded(std::ostream& err, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    io::write_text(path, text);
  }
}

inline std::string set_path(const std::string& out, std::size_t r) {
  const std::filesystem::path p(out);
  return (p.parent_path() / (p.stem().string() + "_r" + std::to_string(r) + p.extension().string())).string();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// generate

enum class Engine { pu, rmg };

struct GenerateOptions {
  std::string spec_path;
  std::string out_path;  // "-" or empty: stdout
  bool all_sets = false;
  bool transpose = false;  // flips the spec's row/column orientation
  Engine engine = Engine::pu;
  std::optional<double> tol;
};

inline int run_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const double tol = resolve_tolerance(opt.tol);
    const io::SpecFile spec = io::load_spec(opt.spec_path);
    Orientation orientation = spec.orientation;
    if (opt.transpose) orientation = orientation == Orientation::row ? Orientation::column : Orientation::row;
    if (opt.all_sets && (opt.out_path.empty() || opt.out_path == "-")) {
      throw Error(ErrorCode::parse_error, "--all-sets needs an output path");
    }
    return io::dispatch_kind(spec.kind, [&]<class T>(std::type_identity<T>) {
      const auto g = io::unwrap_spec<T>(spec.generator);
      const auto summary = validate(g, tol);
      std::vector<std::size_t> indices;
      if (opt.all_sets) {
        for (std::size_t r = 0; r < g.set_size(); ++r) indices.push_back(r);
      } else {
        indices.push_back(spec.set_index);
      }
      std::ostringstream text;
      for (std::size_t r : indices) {
        const SequenceSet<T> set = opt.engine == Engine::rmg ? rmg_set(g, r, orientation, tol)
                                                               : recursive_generate(g, r, orientation, tol);
        const std::string path = opt.all_sets ? detail::set_path(opt.out_path, r) : opt.out_path;
        const std::string body = io::format_table(path, io::wrap_table(set.sequences), spec.kind);
        if (path.empty() || path == "-") {
          text << body;
        } else {
          io::write_text(path, body);
        }
      }
      out << text.str();
      std::ostream& info = (opt.out_path.empty() || opt.out_path == "-") ? err : out;
      info << "M=" << summary.set_size << " K=" << summary.stages << " L=" << summary.length
           << " C=" << io::format_literal(Scalar(summary.constant)) << " kind=" << spec.kind.name()
           << " sets=" << indices.size() << " hash=" << generator_hash(g) << '\n';
      return kExitOk;
    });
  });
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::vector<std::string> paths;
  bool ccc = false;
  std::optional<double> tol;
  bool scale_tol = false;   // multiply tol by L * max|x|^2
  std::string report_path;  // JSON report; "-" for stdout
};

inline int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (opt.paths.empty()) throw Error(ErrorCode::parse_error, "no sequence files given");
    const Tolerance tol{resolve_tolerance(opt.tol), opt.scale_tol};
    std::vector<io::SequenceFile> files;
    for (const auto& p : opt.paths) {
      files.push_back(io::read_sequence_file(p, files.empty() ? std::nullopt : std::optional(files.front().kind)));
    }
    const KindSpec kind = files.front().kind;
    return io::dispatch_kind(kind, [&]<class T>(std::type_identity<T>) {
      std::vector<SequenceSet<T>> sets;
      for (std::size_t i = 0; i < files.size(); ++i) {
        SequenceSet<T> s;
        s.sequences = io::unwrap_table<T>(files[i].rows);
        s.set_index = i;
        sets.push_back(std::move(s));
      }
      std::vector<VerificationReport<T>> reports;
      if (opt.ccc) {
        reports.push_back(ccc_check(sets, tol));
      } else {
        for (const auto& s : sets) reports.push_back(complementarity_check(s, tol));
      }

      bool passed = true;
      io::Json json;
      json["report_version"] = kReportVersion;
      json["mode"] = opt.ccc ? "ccc" : "complementarity";
      json["kind"] = kind.name();
      json["tolerance"] = tol.absolute;
      json["scale_tolerance"] = tol.scale_by_energy;
      io::Json results = io::Json::array();
      for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        passed = passed && r.passed;
        const std::string label = opt.ccc ? std::to_string(sets.size()) + " sets" : opt.paths[i];
        out << (r.passed ? "PASS " : "FAIL ") << (opt.ccc ? "complete complementary code" : "complementary set")
            << " [" << label << "] M=" << sets[opt.ccc ? 0 : i].size() << " L=" << sets[opt.ccc ? 0 : i].length();
        if (r.constant) out << " C=" << io::format_literal(Scalar(*r.constant));
        if (!r.passed) {
          out << " worst_shift=" << r.worst_shift << " worst_violation=" << r.worst_violation;
          if (r.worst_pair) out << " pair=(" << r.worst_pair->first << "," << r.worst_pair->second << ")";
          out << " (" << r.detail << ")";
        }
        out << '\n';
        io::Json item;
        item["source"] = opt.ccc ? io::Json(opt.paths) : io::Json(opt.paths[i]);
        item["passed"] = r.passed;
        item["set_size"] = sets[opt.ccc ? 0 : i].size();
        item["length"] = sets[opt.ccc ? 0 : i].length();
        item["constant"] = r.constant ? io::scalar_to_json(Scalar(*r.constant)) : io::Json();
        item["worst_violation"] = r.worst_violation;
        item["worst_shift"] = r.worst_shift;
        item["worst_pair"] = r.worst_pair ? io::Json::array({r.worst_pair->first, r.worst_pair->second}) : io::Json();
        item["detail"] = r.detail;
        results.push_back(std::move(item));
      }
      json["passed"] = passed;
      json["results"] = std::move(results);
      if (!opt.report_path.empty()) detail::emit(opt.report_path, json.dump(2) + "\n", out);
      return passed ? kExitOk : kExitFailed;
    });
  });
}

// ---------------------------------------------------------------------------
// correlate

struct CorrelateOptions {
  std::string spec_path;
  std::optional<std::size_t> port;  // defaults to the spec's set_index
  std::string input_path;
  std::string out_path;  // "-" or empty: stdout
  bool normalize = false;
  std::optional<double> tol;
};

inline std::string format_op_count(const OpCount& c) {
  std::ostringstream s;
  s << "M=" << c.set_size << " K=" << c.stages << " L=" << c.length << '\n'
    << "multiplications per input sample: cascade " << c.cascade_mults_per_sample << " vs direct "
    << c.direct_mults_per_sample << '\n'
    << "operations per output (single-port input): cascade " << c.cascade_ops_per_output << " vs direct "
    << c.direct_ops_per_output << '\n';
  return s.str();
}

/// Input: one row (a stream for one port), one column (same, one sample
/// per line) or M rows (one stream per port, fed simultaneously).
inline int run_correlate(const CorrelateOptions& opt, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const double tol = resolve_tolerance(opt.tol);
    const io::SpecFile spec = io::load_spec(opt.spec_path);
    io::SequenceFile input = io::read_sequence_file(opt.input_path);
    for (auto& row : input.rows)
      for (auto& v : row) v = convert(v, spec.kind);
    return io::dispatch_kind(spec.kind, [&]<class T>(std::type_identity<T>) {
      const auto g = io::unwrap_spec<T>(spec.generator);
      const auto filter = build_matched_filter(g, tol);
      const std::size_t m = filter.set_size();
      const std::size_t port = opt.port.value_or(spec.set_index);
      if (port >= m) throw Error(ErrorCode::out_of_range, "port " + std::to_string(port) + " >= M");

      auto rows = io::unwrap_table<T>(input.rows);
      std::vector<std::vector<T>> outputs;
      if (rows.size() > 1 && input.columns() == 1) {
        std::vector<T> stream;
        for (auto& r : rows) stream.push_back(r.front());
        rows = {std::move(stream)};
      }
      if (rows.size() == 1) {
        outputs = correlate_stream(filter, port, std::span<const T>(rows.front()));
      } else if (rows.size() == m) {
        outputs = correlate_stream_multi(filter, rows);
      } else {
        throw Error(ErrorCode::shape_mismatch, "input must hold 1 stream or M = " + std::to_string(m) + " streams");
      }

      // one row per time step, one column per output port
      io::Table table;
      KindSpec out_kind = spec.kind;
      if (opt.normalize) {
        const auto scaled = normalize_outputs(outputs, filter.constant);
        table = io::wrap_table(scaled);
        out_kind = {ScalarKind::complex_float, 0};
      } else {
        table = io::wrap_table(outputs);
      }
      io::Table by_time(table.empty() ? 0 : table.front().size(), std::vector<Scalar>(m));
      for (std::size_t p = 0; p < table.size(); ++p)
        for (std::size_t t = 0; t < table[p].size(); ++t) by_time[t][p] = table[p][t];
      const std::string body = io::format_table(opt.out_path.empty() ? "-" : opt.out_path, by_time, out_kind);
      detail::emit(opt.out_path, body, out);
      std::ostream& info = (opt.out_path.empty() || opt.out_path == "-") ? err : out;
      info << format_op_count(op_count(filter));
      return kExitOk;
    });
  });
}

// ---------------------------------------------------------------------------
// catalog

struct CatalogOptions {
  std::string name;  // empty: list the catalog
  std::size_t m = 0;
  std::string kind;  // default: the entry's native kind
};

inline int run_catalog(const CatalogOptions& opt, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (opt.name.empty()) {
      out << "dft                M x M Fourier matrix over cycloM, C = M\n"
          << "hadamard           Sylvester Hadamard matrix, M a power of 2, C = M\n"
          << "qam3-paper         3 x 3 Gaussian-integer matrix for QAM sets, C = 16\n"
          << "eisenstein3-paper  3 x 3 Eisenstein-integer matrix for hexagonal sets, C = 12\n";
      return kExitOk;
    }
    std::size_t m = opt.m;
    if (m == 0) m = (opt.name == "qam3-paper" || opt.name == "eisenstein3-paper") ? 3 : 2;
    KindSpec kind;
    if (!opt.kind.empty()) {
      kind = opt.kind == "cyclo" ? KindSpec{ScalarKind::cyclotomic, static_cast<int>(m)} : io::parse_kind(opt.kind);
    } else if (opt.name == "dft") {
      kind = {ScalarKind::cyclotomic, static_cast<int>(m)};
    } else if (opt.name == "eisenstein3-paper") {
      kind = {ScalarKind::eisenstein, 0};
    } else {
      kind = {ScalarKind::gauss, 0};
    }
    const auto entry = catalog_lookup(opt.name, m, kind);
    io::Table rows;
    for (std::size_t r = 0; r < entry.size(); ++r) {
      const auto row = entry.matrix.row(r);
      rows.emplace_back(row.begin(), row.end());
    }
    out << io::format_csv(rows, kind);
    out << "# C=" << io::format_literal(entry.constant) << '\n';
    return kExitOk;
  });
}

}  // namespace pucodes::cli
