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

// JSON encoding of scalars:
//
//   {"kind":"gauss","a":2,"b":2}
//   {"kind":"eisenstein","a":-2,"b":1}
//   {"kind":"cyclo","n":3,"c":[0,1,0]}      c has length n
//   {"kind":"complex","re":1.0,"im":0.0}

#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pucodes/errors.hpp"
#include "pucodes/io/literal.hpp"
#include "pucodes/scalar.hpp"

namespace pucodes::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline void require_fields(const Json& j, std::initializer_list<std::string_view> allowed, std::string_view what) {
  if (!j.is_object()) throw Error(ErrorCode::parse_error, std::string(what) + " must be an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw Error(ErrorCode::parse_error, "unknown field '" + key + "' in " + std::string(what));
  }
  for (auto a : allowed) {
    if (!j.contains(std::string(a))) {
      throw Error(ErrorCode::parse_error, "missing field '" + std::string(a) + "' in " + std::string(what));
    }
  }
}

inline std::int64_t exact_int(const Json& j, std::string_view what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
      throw Error(ErrorCode::overflow, std::string(what) + " exceeds int64");
    }
    return j.get<std::int64_t>();
  }
  throw Error(ErrorCode::parse_error, std::string(what) + " must be an integer");
}

inline double real_number(const Json& j, std::string_view what) {
  if (!j.is_number()) throw Error(ErrorCode::parse_error, std::string(what) + " must be a number");
  return j.get<double>();
}

}  // namespace detail

inline Json scalar_to_json(const Scalar& s) {
  Json j;
  switch (s.kind()) {
    case ScalarKind::complex_float: {
      const auto& c = s.as<ComplexFloat>();
      j["kind"] = "complex";
      j["re"] = c.re();
      j["im"] = c.im();
      break;
    }
    case ScalarKind::gauss: {
      const auto& g = s.as<GaussInt>();
      j["kind"] = "gauss";
      j["a"] = g.a();
      j["b"] = g.b();
      break;
    }
    case ScalarKind::eisenstein: {
      const auto& e = s.as<EisensteinInt>();
      j["kind"] = "eisenstein";
      j["a"] = e.a();
      j["b"] = e.b();
      break;
    }
    case ScalarKind::cyclotomic: {
      const auto& c = s.as<Cyclotomic>();
      j["kind"] = "cyclo";
      j["n"] = c.order();
      j["c"] = c.dense_coefficients();
      break;
    }
  }
  return j;
}

inline Scalar scalar_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw Error(ErrorCode::parse_error, "scalar must be an object with a string 'kind'");
  }
  const auto kind = j["kind"].get<std::string>();
  if (kind == "gauss") {
    detail::require_fields(j, {"kind", "a", "b"}, "gauss scalar");
    return GaussInt(detail::exact_int(j["a"], "a"), detail::exact_int(j["b"], "b"));
  }
  if (kind == "eisenstein") {
    detail::require_fields(j, {"kind", "a", "b"}, "eisenstein scalar");
    return EisensteinInt(detail::exact_int(j["a"], "a"), detail::exact_int(j["b"], "b"));
  }
  if (kind == "cyclo") {
    detail::require_fields(j, {"kind", "n", "c"}, "cyclo scalar");
    const auto n = detail::exact_int(j["n"], "n");
    if (n < 1 || n > 100000) throw Error(ErrorCode::parse_error, "cyclotomic order out of range");
    if (!j["c"].is_array() || j["c"].size() != static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::parse_error, "'c' must be an array of n integers");
    }
    std::vector<std::int64_t> c;
    for (const auto& v : j["c"]) c.push_back(detail::exact_int(v, "c"));
    return Cyclotomic::from_coefficients(static_cast<int>(n), c);
  }
  if (kind == "complex") {
    detail::require_fields(j, {"kind", "re", "im"}, "complex scalar");
    return ComplexFloat(detail::real_number(j["re"], "re"), detail::real_number(j["im"], "im"));
  }
  throw Error(ErrorCode::parse_error, "unknown scalar kind '" + kind + "'");
}

/// A matrix or sequence cell: a scalar object, a literal string, or a
/// bare number, converted to `kind`.
inline Scalar cell_from_json(const Json& j, const KindSpec& kind) {
  if (j.is_object()) return convert(scalar_from_json(j), kind);
  if (j.is_string()) return parse_literal(j.get<std::string>(), kind);
  if (j.is_number_integer()) {
    const auto v = detail::exact_int(j, "entry");
    switch (kind.kind) {
      case ScalarKind::complex_float: return ComplexFloat(static_cast<double>(v), 0.0);
      case ScalarKind::gauss: return GaussInt(v);
      case ScalarKind::eisenstein: return EisensteinInt(v);
      case ScalarKind::cyclotomic: return Cyclotomic::integer(kind.order, v);
    }
  }
  if (j.is_number() && kind.kind == ScalarKind::complex_float) return ComplexFloat(j.get<double>(), 0.0);
  throw Error(ErrorCode::parse_error, "cannot read '" + j.dump() + "' as " + kind.name());
}

}  // namespace pucodes::io
