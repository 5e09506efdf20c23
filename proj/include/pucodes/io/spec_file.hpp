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

// Generator spec files (JSON).
//
//   {
//     "m": 3, "k": 2,
//     "kind": "cyclo",              gauss | eisenstein | complex | cyclo | cycloN
//     "order": 3,                   cyclo only; defaults to m
//     "unitaries": ["dft"],         k+1 entries, or one entry used for every stage;
//                                   each a catalog name or a matrix (array of rows)
//     "delays": {"standard": {"pi": [0, 1]}},   or {"explicit": [[0,1,2], ...]}
//     "set_index": 0,
//     "orientation": "row",         row | column
//     "description": "..."          free text, ignored
//   }
//
// Only "m", "k", "kind" and "unitaries" are required. Matrix entries may be
// scalar objects, literal strings or integers. Unknown fields are rejected.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "pucodes/constellations.hpp"
#include "pucodes/errors.hpp"
#include "pucodes/generator.hpp"
#include "pucodes/io/json_codec.hpp"
#include "pucodes/io/literal.hpp"
#include "pucodes/io/sequence_file.hpp"
#include "pucodes/scalar.hpp"
#include "pucodes/zpoly.hpp"

namespace pucodes::io {

struct SpecFile {
  KindSpec kind;
  GeneratorSpec<Scalar> generator;
  std::vector<std::string> unitary_names;  // catalog names; "" for inline matrices
  std::size_t set_index = 0;
  Orientation orientation = Orientation::row;
  std::string description;
};

namespace detail {

// Line of the value addressed by a JSON pointer, found by walking the
// source text. Best effort: used for diagnostics only.
inline std::size_t locate_line(std::string_view text, const std::vector<std::string>& path) {
  std::size_t pos = 0;
  for (const auto& key : path) {
    if (!key.empty() && std::isdigit(static_cast<unsigned char>(key.front()))) continue;
    const std::string quoted = "\"" + key + "\"";
    std::size_t at = pos;
    while ((at = text.find(quoted, at)) != std::string_view::npos) {
      std::size_t after = at + quoted.size();
      while (after < text.size() && std::isspace(static_cast<unsigned char>(text[after]))) ++after;
      if (after < text.size() && text[after] == ':') break;
      at += quoted.size();
    }
    if (at == std::string_view::npos) break;
    pos = at;
  }
  std::size_t line = 1;
  for (std::size_t i = 0; i < pos && i < text.size(); ++i) line += text[i] == '\n';
  return line;
}

class SpecReader {
 public:
  explicit SpecReader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(ErrorCode code, const std::vector<std::string>& path, const std::string& msg) const {
    std::string where = "line " + std::to_string(locate_line(text_, path)) + " at /";
    for (std::size_t i = 0; i < path.size(); ++i) where += (i ? "/" : "") + path[i];
    throw Error(code, where + ": " + msg);
  }

  std::int64_t integer(const Json& j, const std::vector<std::string>& path, std::int64_t lo) const {
    if (!j.is_number_integer()) fail(ErrorCode::parse_error, path, "expected an integer");
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
      fail(ErrorCode::overflow, path, "integer too large");
    }
    const auto v = j.get<std::int64_t>();
    if (v < lo) fail(ErrorCode::parse_error, path, "must be >= " + std::to_string(lo));
    return v;
  }

  template <class F>
  auto guarded(const std::vector<std::string>& path, F&& f) const {
    try {
      return f();
    } catch (const Error& e) {
      fail(e.code(), path, e.detail());
    }
  }

  SpecFile read() const {
    Json doc;
    try {
      doc = Json::parse(text_);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::parse_error, e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::parse_error, "line 1: spec must be a JSON object");
    static constexpr std::string_view known[] = {"m",     "k",         "kind",        "order",      "unitaries",
                                                 "delays", "set_index", "orientation", "description"};
    for (const auto& [key, value] : doc.items()) {
      bool ok = false;
      for (auto k : known) ok = ok || key == k;
      if (!ok) fail(ErrorCode::parse_error, {key}, "unknown field '" + key + "'");
    }
    for (const char* req : {"m", "k", "kind", "unitaries"}) {
      if (!doc.contains(req)) throw Error(ErrorCode::parse_error, std::string("missing field '") + req + "'");
    }

    SpecFile out;
    const auto m = static_cast<std::size_t>(integer(doc["m"], {"m"}, 1));
    const auto k = static_cast<std::size_t>(integer(doc["k"], {"k"}, 0));
    if (m > 4096 || k > 64) fail(ErrorCode::out_of_range, {"m"}, "m or k unreasonably large");

    if (!doc["kind"].is_string()) fail(ErrorCode::parse_error, {"kind"}, "expected a string");
    const auto kind_name = doc["kind"].get<std::string>();
    if (kind_name == "cyclo") {
      const auto order = doc.contains("order") ? integer(doc["order"], {"order"}, 1) : static_cast<std::int64_t>(m);
      if (order > 100000) fail(ErrorCode::out_of_range, {"order"}, "order too large");
      out.kind = {ScalarKind::cyclotomic, static_cast<int>(order)};
    } else {
      out.kind = guarded({"kind"}, [&] { return parse_kind(kind_name); });
      if (doc.contains("order")) {
        if (out.kind.kind != ScalarKind::cyclotomic ||
            integer(doc["order"], {"order"}, 1) != out.kind.order) {
          fail(ErrorCode::parse_error, {"order"}, "'order' only applies to cyclo kinds");
        }
      }
    }

    const Json& us = doc["unitaries"];
    if (!us.is_array() || (us.size() != k + 1 && us.size() != 1)) {
      fail(ErrorCode::invalid_spec, {"unitaries"}, "expected 1 or k+1 = " + std::to_string(k + 1) + " entries");
    }
    std::vector<ConstMatrix<Scalar>> mats;
    for (std::size_t i = 0; i < us.size(); ++i) {
      const std::vector<std::string> path = {"unitaries", std::to_string(i)};
      if (us[i].is_string()) {
        const auto name = us[i].get<std::string>();
        mats.push_back(guarded(path, [&] { return catalog_lookup(name, m, out.kind).matrix; }));
        out.unitary_names.push_back(name);
      } else {
        mats.push_back(matrix(us[i], m, out.kind, path));
        out.unitary_names.emplace_back();
      }
    }
    while (mats.size() < k + 1) {
      mats.push_back(mats.front());
      out.unitary_names.push_back(out.unitary_names.front());
    }
    out.generator.unitaries = std::move(mats);

    out.generator.delays = StandardDelays{identity_permutation(k)};
    if (doc.contains("delays")) out.generator.delays = delays(doc["delays"], m, k);

    if (doc.contains("set_index")) {
      out.set_index = static_cast<std::size_t>(integer(doc["set_index"], {"set_index"}, 0));
      if (out.set_index >= m) fail(ErrorCode::out_of_range, {"set_index"}, "set_index must be < m");
    }
    if (doc.contains("orientation")) {
      const Json& o = doc["orientation"];
      if (o == "row") {
        out.orientation = Orientation::row;
      } else if (o == "column") {
        out.orientation = Orientation::column;
      } else {
        fail(ErrorCode::parse_error, {"orientation"}, "expected \"row\" or \"column\"");
      }
    }
    if (doc.contains("description")) {
      if (!doc["description"].is_string()) fail(ErrorCode::parse_error, {"description"}, "expected a string");
      out.description = doc["description"].get<std::string>();
    }
    guarded({"unitaries"}, [&] { return validate(out.generator); });
    return out;
  }

 private:
  ConstMatrix<Scalar> matrix(const Json& j, std::size_t m, const KindSpec& kind,
                             const std::vector<std::string>& path) const {
    if (!j.is_array() || j.size() != m) fail(ErrorCode::size_mismatch, path, "expected " + std::to_string(m) + " rows");
    ConstMatrix<Scalar> out(m, zero_of(kind));
    for (std::size_t r = 0; r < m; ++r) {
      if (!j[r].is_array() || j[r].size() != m) {
        fail(ErrorCode::size_mismatch, path, "row " + std::to_string(r) + " needs " + std::to_string(m) + " entries");
      }
      for (std::size_t c = 0; c < m; ++c) out(r, c) = guarded(path, [&] { return cell_from_json(j[r][c], kind); });
    }
    return out;
  }

  DelayPlan delays(const Json& j, std::size_t m, std::size_t k) const {
    if (!j.is_object() || j.size() != 1) {
      fail(ErrorCode::parse_error, {"delays"}, "expected {\"standard\": ...} or {\"explicit\": ...}");
    }
    if (j.contains("standard")) {
      const Json& s = j["standard"];
      if (!s.is_object()) fail(ErrorCode::parse_error, {"delays", "standard"}, "expected an object");
      for (const auto& [key, value] : s.items()) {
        if (key != "pi") fail(ErrorCode::parse_error, {"delays", "standard", key}, "unknown field '" + key + "'");
      }
      if (!s.contains("pi")) return StandardDelays{identity_permutation(k)};
      const std::vector<std::string> path = {"delays", "standard", "pi"};
      if (!s["pi"].is_array()) fail(ErrorCode::invalid_permutation, path, "expected an array");
      std::vector<int> pi;
      for (const auto& v : s["pi"]) {
        if (!v.is_number_integer()) fail(ErrorCode::invalid_permutation, path, "entries must be integers");
        const auto x = v.get<std::int64_t>();
        if (x < 0 || x >= static_cast<std::int64_t>(k)) {
          fail(ErrorCode::invalid_permutation, path, "entry " + std::to_string(x) + " outside [0, k)");
        }
        pi.push_back(static_cast<int>(x));
      }
      guarded(path, [&] {
        require_permutation(pi, k);
        return 0;
      });
      return StandardDelays{std::move(pi)};
    }
    if (j.contains("explicit")) {
      const std::vector<std::string> path = {"delays", "explicit"};
      const Json& e = j["explicit"];
      if (!e.is_array() || e.size() != k) fail(ErrorCode::invalid_spec, path, "expected k delay vectors");
      ExplicitDelays plan;
      for (const auto& stage : e) {
        if (!stage.is_array() || stage.size() != m) fail(ErrorCode::size_mismatch, path, "each stage needs m delays");
        std::vector<std::int64_t> d;
        for (const auto& v : stage) d.push_back(integer(v, path, 0));
        plan.stages.emplace_back(std::move(d));
      }
      return plan;
    }
    fail(ErrorCode::parse_error, {"delays"}, "expected \"standard\" or \"explicit\"");
  }

  std::string_view text_;
};

}  // namespace detail

inline SpecFile parse_spec(std::string_view text) { return detail::SpecReader(text).read(); }

inline SpecFile load_spec(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  try {
    return parse_spec(text);
  } catch (const Error& e) {
    throw e.with_context(path.string());
  }
}

/// Inverse of parse_spec, inlining every matrix as scalar objects.
inline Json spec_to_json(const SpecFile& spec) {
  Json j;
  const auto& g = spec.generator;
  j["m"] = g.set_size();
  j["k"] = g.stages();
  if (spec.kind.kind == ScalarKind::cyclotomic) {
    j["kind"] = "cyclo";
    j["order"] = spec.kind.order;
  } else {
    j["kind"] = spec.kind.name();
  }
  Json us = Json::array();
  for (const auto& u : g.unitaries) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < u.size(); ++r) {
      Json row = Json::array();
      for (const auto& v : u.row(r)) row.push_back(scalar_to_json(v));
      rows.push_back(std::move(row));
    }
    us.push_back(std::move(rows));
  }
  j["unitaries"] = std::move(us);
  if (const auto* s = std::get_if<StandardDelays>(&g.delays)) {
    j["delays"] = {{"standard", {{"pi", s->permutation}}}};
  } else {
    Json stages = Json::array();
    for (const auto& d : std::get<ExplicitDelays>(g.delays).stages) stages.push_back(d.delays);
    j["delays"] = {{"explicit", std::move(stages)}};
  }
  j["set_index"] = spec.set_index;
  j["orientation"] = spec.orientation == Orientation::row ? "row" : "column";
  if (!spec.description.empty()) j["description"] = spec.description;
  return j;
}

// ---------------------------------------------------------------------------
// From the dynamic Scalar to a concrete ring type

/// Calls f(std::type_identity<T>{}) with T the concrete type of `kind`.
template <class F>
decltype(auto) dispatch_kind(const KindSpec& kind, F&& f) {
  switch (kind.kind) {
    case ScalarKind::gauss: return f(std::type_identity<GaussInt>{});
    case ScalarKind::eisenstein: return f(std::type_identity<EisensteinInt>{});
    case ScalarKind::cyclotomic: return f(std::type_identity<Cyclotomic>{});
    case ScalarKind::complex_float: break;
  }
  return f(std::type_identity<ComplexFloat>{});
}

template <RingScalar T>
std::vector<std::vector<T>> unwrap_table(const Table& rows) {
  std::vector<std::vector<T>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<T> r;
    r.reserve(row.size());
    for (const auto& v : row) r.push_back(v.as<T>());
    out.push_back(std::move(r));
  }
  return out;
}

template <RingScalar T>
Table wrap_table(const std::vector<std::vector<T>>& rows) {
  Table out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.emplace_back(row.begin(), row.end());
  return out;
}

template <RingScalar T>
GeneratorSpec<T> unwrap_spec(const GeneratorSpec<Scalar>& g) {
  GeneratorSpec<T> out;
  out.delays = g.delays;
  for (const auto& u : g.unitaries) out.unitaries.push_back(u.map([](const Scalar& v) { return v.as<T>(); }));
  return out;
}

}  // namespace pucodes::io
