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

// Text literals for scalars, as used in CSV cells.
//
//   gauss       2+2i  -1-3i  i  -i  5
//   eisenstein  -2+w  3-2w  w  7
//   cyclotomic  w3^2  -w4^1  1+2*w5^3  (a root of unity prints as wN^e)
//   complex     1.5;-0.25   (real;imag, printed with 17 significant digits)
//
// Kind names: complex, gauss, eisenstein, cycloN.

#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pucodes/errors.hpp"
#include "pucodes/scalar.hpp"

namespace pucodes::io {

inline KindSpec parse_kind(std::string_view name) {
  if (name == "complex") return {ScalarKind::complex_float, 0};
  if (name == "gauss") return {ScalarKind::gauss, 0};
  if (name == "eisenstein") return {ScalarKind::eisenstein, 0};
  if (name.starts_with("cyclo") && name.size() > 5) {
    int order = 0;
    const auto tail = name.substr(5);
    auto [p, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), order);
    if (ec == std::errc() && p == tail.data() + tail.size() && order >= 1) return {ScalarKind::cyclotomic, order};
  }
  throw Error(ErrorCode::parse_error, "unknown scalar kind '" + std::string(name) + "'");
}

namespace detail {

inline std::string signed_term(std::int64_t coef, std::string_view symbol, bool first) {
  std::string out;
  if (coef < 0) {
    out += '-';
  } else if (!first) {
    out += '+';
  }
  const std::int64_t mag = coef < 0 ? -coef : coef;
  if (symbol.empty()) return out + std::to_string(mag);
  if (mag != 1) out += std::to_string(mag);
  return out + std::string(symbol);
}

inline std::string two_term(std::int64_t a, std::int64_t b, std::string_view symbol) {
  if (b == 0) return std::to_string(a);
  if (a == 0) return signed_term(b, symbol, true);
  return std::to_string(a) + signed_term(b, symbol, false);
}

inline std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size()) {
    throw Error(ErrorCode::parse_error, "bad integer in literal '" + std::string(whole) + "'");
  }
  return v;
}

struct Term {
  std::int64_t coef = 1;
  enum class Symbol { none, i, w, root } symbol = Symbol::none;
  int order = 0;
  std::int64_t exponent = 0;
};

// Splits "a+bX-cY" into signed terms.
inline std::vector<Term> parse_terms(std::string_view text) {
  std::string compact;
  bool gap = false;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      gap = !compact.empty();
      continue;
    }
    // blanks may only separate a term from a sign
    if (gap && ch != '+' && ch != '-' && compact.back() != '+' && compact.back() != '-') {
      throw Error(ErrorCode::parse_error, "stray blank in literal '" + std::string(text) + "'");
    }
    gap = false;
    compact += ch;
  }
  if (compact.empty()) throw Error(ErrorCode::parse_error, "empty literal");
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    bool negative = false;
    if (compact[pos] == '+' || compact[pos] == '-') {
      negative = compact[pos] == '-';
      ++pos;
    } else if (!terms.empty()) {
      throw Error(ErrorCode::parse_error, "expected sign in literal '" + compact + "'");
    }
    std::size_t end = pos;
    while (end < compact.size() && compact[end] != '+' && compact[end] != '-') ++end;
    std::string_view body(compact.data() + pos, end - pos);
    if (body.empty()) throw Error(ErrorCode::parse_error, "dangling sign in literal '" + compact + "'");
    Term t;
    std::size_t digits = 0;
    while (digits < body.size() && std::isdigit(static_cast<unsigned char>(body[digits]))) ++digits;
    if (digits > 0) t.coef = parse_int(body.substr(0, digits), compact);
    std::string_view rest = body.substr(digits);
    if (!rest.empty() && rest.front() == '*') {
      if (digits == 0) throw Error(ErrorCode::parse_error, "bad literal '" + compact + "'");
      rest.remove_prefix(1);
      if (rest.empty()) throw Error(ErrorCode::parse_error, "bad literal '" + compact + "'");
    }
    if (rest.empty()) {
      if (digits == 0) throw Error(ErrorCode::parse_error, "bad literal '" + compact + "'");
    } else if (rest == "i") {
      t.symbol = Term::Symbol::i;
    } else if (rest == "w") {
      t.symbol = Term::Symbol::w;
    } else if (rest.front() == 'w') {
      t.symbol = Term::Symbol::root;
      const auto caret = rest.find('^');
      const auto order_text = rest.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1);
      t.order = static_cast<int>(parse_int(order_text, compact));
      t.exponent = caret == std::string_view::npos ? 1 : parse_int(rest.substr(caret + 1), compact);
      if (t.order < 1) throw Error(ErrorCode::parse_error, "root order must be >= 1 in '" + compact + "'");
    } else {
      throw Error(ErrorCode::parse_error, "bad literal '" + compact + "'");
    }
    if (negative) t.coef = -t.coef;
    terms.push_back(t);
    pos = end;
  }
  return terms;
}

}  // namespace detail

inline std::string format_literal(const Scalar& s) {
  switch (s.kind()) {
    case ScalarKind::complex_float: {
      const auto& c = s.as<ComplexFloat>();
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g;%.17g", c.re(), c.im());
      return buf;
    }
    case ScalarKind::gauss: {
      const auto& g = s.as<GaussInt>();
      return detail::two_term(g.a(), g.b(), "i");
    }
    case ScalarKind::eisenstein: {
      const auto& e = s.as<EisensteinInt>();
      return detail::two_term(e.a(), e.b(), "w");
    }
    case ScalarKind::cyclotomic: {
      const auto& c = s.as<Cyclotomic>();
      const auto coeffs = c.coefficients();
      const std::string root = "w" + std::to_string(c.order()) + "^";
      if (is_integer(c)) return std::to_string(coeffs[0]);
      if (auto e = root_exponent(c)) return root + std::to_string(*e);
      if (auto e = root_exponent(-c)) return "-" + root + std::to_string(*e);
      std::string out;
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) continue;
        const std::string symbol = j == 0 ? "" : "*" + root + std::to_string(j);
        if (j == 0) {
          out += std::to_string(coeffs[j]);
        } else {
          const std::int64_t mag = coeffs[j] < 0 ? -coeffs[j] : coeffs[j];
          out += coeffs[j] < 0 ? "-" : (out.empty() ? "" : "+");
          out += mag == 1 ? root + std::to_string(j) : std::to_string(mag) + symbol;
        }
      }
      return out;
    }
  }
  return {};
}

/// Parses a literal as an element of `kind`. Cyclotomic literals may use
/// any root order dividing the target order.
inline Scalar parse_literal(std::string_view text, const KindSpec& kind) {
  if (kind.kind == ScalarKind::complex_float) {
    std::string s(text);
    const auto semi = s.find(';');
    auto number = [&](const std::string& part) {
      std::size_t used = 0;
      double v = 0;
      try {
        v = std::stod(part, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      while (used < part.size() && std::isspace(static_cast<unsigned char>(part[used]))) ++used;
      if (used != part.size() || part.empty()) throw Error(ErrorCode::parse_error, "bad complex literal '" + s + "'");
      return v;
    };
    if (semi == std::string::npos) return ComplexFloat(number(s), 0.0);
    return ComplexFloat(number(s.substr(0, semi)), number(s.substr(semi + 1)));
  }
  const auto terms = detail::parse_terms(text);
  const std::string whole(text);
  switch (kind.kind) {
    case ScalarKind::gauss: {
      GaussInt acc;
      for (const auto& t : terms) {
        if (t.symbol == detail::Term::Symbol::none) acc += GaussInt(t.coef);
        else if (t.symbol == detail::Term::Symbol::i) acc += GaussInt(0, t.coef);
        else throw Error(ErrorCode::kind_mismatch, "'" + whole + "' is not a Gaussian integer");
      }
      return acc;
    }
    case ScalarKind::eisenstein: {
      EisensteinInt acc;
      for (const auto& t : terms) {
        if (t.symbol == detail::Term::Symbol::none) acc += EisensteinInt(t.coef);
        else if (t.symbol == detail::Term::Symbol::w) acc += EisensteinInt(0, t.coef);
        else throw Error(ErrorCode::kind_mismatch, "'" + whole + "' is not an Eisenstein integer");
      }
      return acc;
    }
    case ScalarKind::cyclotomic: {
      const int n = kind.order;
      std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
      for (const auto& t : terms) {
        std::int64_t slot = 0;
        if (t.symbol == detail::Term::Symbol::root) {
          if (n % t.order != 0) {
            throw Error(ErrorCode::kind_mismatch, "'" + whole + "' is not in cyclo" + std::to_string(n));
          }
          slot = pucodes::detail::floor_mod(t.exponent * (n / t.order), n);
        } else if (t.symbol != detail::Term::Symbol::none) {
          throw Error(ErrorCode::kind_mismatch, "'" + whole + "' is not a cyclotomic literal");
        }
        auto& v = c[static_cast<std::size_t>(slot)];
        v = pucodes::detail::checked_add(v, t.coef);
      }
      return Cyclotomic::from_coefficients(n, c);
    }
    default: break;
  }
  throw Error(ErrorCode::parse_error, "unsupported kind");
}

/// Guesses the kind of a collection of literals: ';' or a decimal point
/// means complex, wN^e cyclotomic (order = lcm of the N seen), a bare w
/// Eisenstein; anything else (i, plain integers) is gauss.
inline KindSpec infer_kind(const std::vector<std::string>& cells) {
  int order = 0;
  bool eisenstein = false;
  for (const auto& cell : cells) {
    if (cell.find(';') != std::string::npos || cell.find('.') != std::string::npos) {
      return {ScalarKind::complex_float, 0};
    }
    for (std::size_t i = 0; i < cell.size(); ++i) {
      if (cell[i] != 'w') continue;
      std::size_t j = i + 1;
      int n = 0;
      while (j < cell.size() && std::isdigit(static_cast<unsigned char>(cell[j]))) n = n * 10 + (cell[j++] - '0');
      if (j == i + 1) {
        eisenstein = true;
      } else if (n > 0) {
        order = order == 0 ? n : std::lcm(order, n);
      }
    }
  }
  if (order > 0) return {ScalarKind::cyclotomic, order};
  if (eisenstein) return {ScalarKind::eisenstein, 0};
  return {ScalarKind::gauss, 0};
}

}  // namespace pucodes::io
