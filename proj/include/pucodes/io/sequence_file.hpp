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

// Sequence files: rectangular tables of scalars of a single kind.
//
// CSV: one row per line, cells are literals (see literal.hpp). Lines
// starting with '#' are comments, except that a first line of the form
// "# pucodes kind=<name>" fixes the kind. Without it the kind is inferred.
//
// JSON: an array of arrays of scalar objects.
//
// The format follows the file extension: ".json" is JSON, anything else CSV.

#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pucodes/errors.hpp"
#include "pucodes/io/json_codec.hpp"
#include "pucodes/io/literal.hpp"
#include "pucodes/scalar.hpp"

namespace pucodes::io {

using Table = std::vector<std::vector<Scalar>>;

struct SequenceFile {
  KindSpec kind;
  Table rows;

  std::size_t columns() const { return rows.empty() ? 0 : rows.front().size(); }
};

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io_error, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::io_error, "write failed for " + path.string());
}

inline bool is_json_path(const std::filesystem::path& path) { return path.extension() == ".json"; }

namespace detail {

inline void require_table(const Table& rows, const KindSpec& kind) {
  for (const auto& row : rows) {
    if (row.size() != rows.front().size()) throw Error(ErrorCode::shape_mismatch, "rows differ in length");
    for (const auto& v : row) {
      if (v.kind_spec() != kind) throw Error(ErrorCode::kind_mismatch, "mixed kinds in table");
    }
  }
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// CSV

inline std::string format_csv(const Table& rows, const KindSpec& kind) {
  detail::require_table(rows, kind);
  std::string out = "# pucodes kind=" + kind.name() + "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += format_literal(row[c]);
    }
    out += '\n';
  }
  return out;
}

inline SequenceFile parse_csv(const std::string& text, std::optional<KindSpec> kind = std::nullopt) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> cells;  // (line number, cells)
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = detail::trim(line);
    if (t.empty()) continue;
    if (t.front() == '#') {
      const auto pos = t.find("kind=");
      if (cells.empty() && t.find("pucodes") != std::string::npos && pos != std::string::npos) {
        std::string name = t.substr(pos + 5);
        name = name.substr(0, name.find_first_of(" \t"));
        const KindSpec declared = parse_kind(name);
        if (kind && *kind != declared) {
          throw Error(ErrorCode::kind_mismatch, "file declares " + declared.name() + ", expected " + kind->name());
        }
        kind = declared;
      }
      continue;
    }
    std::vector<std::string> row;
    std::stringstream ls(t);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(detail::trim(cell));
    if (t.back() == ',') row.emplace_back();
    cells.emplace_back(line_no, std::move(row));
  }
  if (!kind) {
    std::vector<std::string> all;
    for (const auto& [n, row] : cells) all.insert(all.end(), row.begin(), row.end());
    kind = infer_kind(all);
  }
  SequenceFile out{*kind, {}};
  for (const auto& [n, row] : cells) {
    if (!out.rows.empty() && row.size() != out.columns()) {
      throw Error(ErrorCode::shape_mismatch, "line " + std::to_string(n) + ": expected " +
                                                 std::to_string(out.columns()) + " cells, found " +
                                                 std::to_string(row.size()));
    }
    std::vector<Scalar> values;
    for (const auto& c : row) {
      try {
        values.push_back(parse_literal(c, *kind));
      } catch (const Error& e) {
        throw e.with_context("line " + std::to_string(n));
      }
    }
    out.rows.push_back(std::move(values));
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

inline std::string format_json_table(const Table& rows, const KindSpec& kind) {
  detail::require_table(rows, kind);
  std::string out = "[\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Json row = Json::array();
    for (const auto& v : rows[r]) row.push_back(scalar_to_json(v));
    out += "  " + row.dump() + (r + 1 < rows.size() ? ",\n" : "\n");
  }
  return out + "]\n";
}

inline SequenceFile parse_json_table(const std::string& text, std::optional<KindSpec> kind = std::nullopt) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::parse_error, "sequence file must be an array of arrays");
  SequenceFile out;
  for (std::size_t r = 0; r < doc.size(); ++r) {
    if (!doc[r].is_array()) throw Error(ErrorCode::parse_error, "row " + std::to_string(r) + " is not an array");
    std::vector<Scalar> row;
    for (const auto& cell : doc[r]) {
      try {
        Scalar v = scalar_from_json(cell);
        if (!kind) kind = v.kind_spec();
        row.push_back(convert(v, *kind));
      } catch (const Error& e) {
        throw e.with_context("row " + std::to_string(r));
      }
    }
    if (!out.rows.empty() && row.size() != out.columns()) {
      throw Error(ErrorCode::shape_mismatch, "row " + std::to_string(r) + " differs in length");
    }
    out.rows.push_back(std::move(row));
  }
  out.kind = kind.value_or(KindSpec{ScalarKind::gauss, 0});
  return out;
}

// ---------------------------------------------------------------------------
// Files

inline std::string format_table(const std::filesystem::path& path, const Table& rows, const KindSpec& kind) {
  return is_json_path(path) ? format_json_table(rows, kind) : format_csv(rows, kind);
}

inline void write_sequence_file(const std::filesystem::path& path, const Table& rows, const KindSpec& kind) {
  write_text(path, format_table(path, rows, kind));
}

inline SequenceFile read_sequence_file(const std::filesystem::path& path,
                                       std::optional<KindSpec> kind = std::nullopt) {
  const std::string text = read_text(path);
  try {
    return is_json_path(path) ? parse_json_table(text, kind) : parse_csv(text, kind);
  } catch (const Error& e) {
    throw e.with_context(path.string());
  }
}

}  // namespace pucodes::io
