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

// Generating matrices of complementary sets.
//
// Stage convention: unitaries U(0)..U(K), delay stages D(0)..D(K-1), and
//
//   M(Z^-1) = U(0) * D(0) * U(1) * D(1) * ... * D(K-1) * U(K).
//
// With standard delays, stage k uses D(k)_m = m * M^pi[k]. Set r is row r
// of M by default, so sequence s of set r is M_{r,s}; that is the indexing
// the radix-M evaluation and the matched filter's input ports use. Column
// sets are available through Orientation::column.

#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "pucodes/errors.hpp"
#include "pucodes/scalar.hpp"
#include "pucodes/zpoly.hpp"

namespace pucodes {

// ---------------------------------------------------------------------------
// Radix-M digits

inline std::int64_t checked_pow(std::int64_t base, std::size_t exponent) {
  std::int64_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) out = detail::checked_mul(out, base);
  return out;
}

struct DigitExpansion {
  std::int64_t n = 0;
  std::int64_t base = 2;
  std::vector<int> digits;  // least significant first
};

/// Radix-m digits d_0..d_{k-1} of n, requiring 0 <= n < m^k.
inline DigitExpansion digits(std::int64_t n, std::int64_t m, std::size_t k) {
  if (m < 1) throw Error(ErrorCode::out_of_range, "radix must be >= 1");
  if (n < 0 || n >= checked_pow(m, k)) {
    throw Error(ErrorCode::out_of_range, "n=" + std::to_string(n) + " outside [0, M^K)");
  }
  DigitExpansion out{n, m, std::vector<int>(k, 0)};
  for (std::size_t i = 0; i < k && m > 1; ++i) {
    out.digits[i] = static_cast<int>(n % m);
    n /= m;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Delay plans

struct StandardDelays {
  std::vector<int> permutation;  // pi[k] for stage k
  friend bool operator==(const StandardDelays&, const StandardDelays&) = default;
};

struct ExplicitDelays {
  std::vector<DelayVector> stages;
  friend bool operator==(const ExplicitDelays&, const ExplicitDelays&) = default;
};

using DelayPlan = std::variant<StandardDelays, ExplicitDelays>;

inline void require_permutation(std::span<const int> pi, std::size_t k) {
  if (pi.size() != k) throw Error(ErrorCode::invalid_permutation, "expected " + std::to_string(k) + " entries");
  std::vector<bool> seen(k, false);
  for (int v : pi) {
    if (v < 0 || static_cast<std::size_t>(v) >= k || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::invalid_permutation, "not a bijection on {0..K-1}");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

/// Stage k gets regular_delays(m, m^pi[k]).
inline std::vector<DelayVector> standard_delays(std::size_t m, std::size_t k, std::span<const int> pi) {
  require_permutation(pi, k);
  std::vector<DelayVector> out;
  out.reserve(k);
  for (std::size_t s = 0; s < k; ++s) {
    out.push_back(regular_delays(m, checked_pow(static_cast<std::int64_t>(m), static_cast<std::size_t>(pi[s]))));
  }
  return out;
}

inline std::vector<int> identity_permutation(std::size_t k) {
  std::vector<int> pi(k);
  std::iota(pi.begin(), pi.end(), 0);
  return pi;
}

// ---------------------------------------------------------------------------
// Generator spec

template <RingScalar T>
struct GeneratorSpec {
  std::vector<ConstMatrix<T>> unitaries;  // U(0)..U(K)
  DelayPlan delays = StandardDelays{};

  std::size_t set_size() const { return unitaries.empty() ? 0 : unitaries.front().size(); }
  std::size_t stages() const { return unitaries.empty() ? 0 : unitaries.size() - 1; }
  bool is_standard() const { return std::holds_alternative<StandardDelays>(delays); }
  const T& sample() const { return unitaries.front()(0, 0); }
};

template <RingScalar T>
std::vector<DelayVector> stage_delays(const GeneratorSpec<T>& g) {
  if (const auto* s = std::get_if<StandardDelays>(&g.delays)) {
    return standard_delays(g.set_size(), g.stages(), s->permutation);
  }
  return std::get<ExplicitDelays>(g.delays).stages;
}

/// 1 + sum over stages of the largest delay; M^K for standard plans.
template <RingScalar T>
std::int64_t sequence_length(const GeneratorSpec<T>& g) {
  std::int64_t total = 0;
  for (const auto& d : stage_delays(g)) total = detail::checked_add(total, d.max());
  return total + 1;
}

template <RingScalar T>
struct SpecSummary {
  std::size_t set_size = 0;
  std::size_t stages = 0;
  std::int64_t length = 0;
  std::vector<T> stage_constants;
  T constant;  // product of the stage constants
};

/// Checks every invariant of a GeneratorSpec and returns its constants.
template <RingScalar T>
SpecSummary<T> validate(const GeneratorSpec<T>& g, double tol = kDefaultTolerance) {
  if (g.unitaries.empty()) throw Error(ErrorCode::invalid_spec, "at least one unitary matrix is required");
  const std::size_t m = g.set_size();
  if (m == 0) throw Error(ErrorCode::invalid_spec, "empty unitary matrix");
  SpecSummary<T> out;
  out.set_size = m;
  out.stages = g.stages();
  out.constant = one_like(g.sample());
  for (std::size_t k = 0; k < g.unitaries.size(); ++k) {
    const auto& u = g.unitaries[k];
    if (u.size() != m) throw Error(ErrorCode::size_mismatch, "unitary " + std::to_string(k) + " has wrong size");
    for (const auto& v : u.data()) {
      if (!same_kind(v, g.sample())) throw Error(ErrorCode::kind_mismatch, "unitary " + std::to_string(k));
    }
    auto c = unitary_constant(u, tol);
    if (!c) throw Error(ErrorCode::invalid_spec, "matrix " + std::to_string(k) + " is not unitary");
    out.stage_constants.push_back(*c);
    out.constant = out.constant * *c;
  }
  const auto delays = stage_delays(g);
  if (delays.size() != g.stages()) {
    throw Error(ErrorCode::invalid_spec, "expected " + std::to_string(g.stages()) + " delay stages");
  }
  for (const auto& d : delays) {
    if (d.size() != m) throw Error(ErrorCode::size_mismatch, "delay vector has wrong size");
  }
  out.length = sequence_length(g);
  return out;
}

/// FNV-1a over a canonical text rendering; identifies a spec in provenance tags.
template <RingScalar T>
std::string generator_hash(const GeneratorSpec<T>& g) {
  std::ostringstream text;
  text << "M=" << g.set_size() << ";K=" << g.stages();
  for (const auto& u : g.unitaries) {
    text << ";U=";
    for (const auto& v : u.data()) text << canonical_text(v) << ' ';
  }
  if (const auto* s = std::get_if<StandardDelays>(&g.delays)) {
    text << ";std";
    for (int p : s->permutation) text << ',' << p;
  } else {
    text << ";exp";
    for (const auto& d : std::get<ExplicitDelays>(g.delays).stages) {
      text << '/';
      for (auto v : d.delays) text << v << ',';
    }
  }
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : text.str()) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------
// Polynomial product construction

/// U(0) * prod_k (D(k) * U(k+1)).
template <RingScalar T>
PolyMatrix<T> build_generating_matrix(const GeneratorSpec<T>& g, double tol = kDefaultTolerance) {
  validate(g, tol);
  const T one = one_like(g.sample());
  const auto delays = stage_delays(g);
  PolyMatrix<T> out = PolyMatrix<T>::from_constant(g.unitaries.front());
  for (std::size_t k = 0; k < delays.size(); ++k) {
    out = out * delay_matrix(delays[k], one);
    out = out * PolyMatrix<T>::from_constant(g.unitaries[k + 1]);
  }
  return out;
}

enum class Orientation { row, column };

template <RingScalar T>
struct SequenceSet {
  std::vector<std::vector<T>> sequences;
  std::size_t set_index = 0;
  std::string generator_hash;

  std::size_t size() const noexcept { return sequences.size(); }
  std::size_t length() const noexcept { return sequences.empty() ? 0 : sequences.front().size(); }

  friend bool operator==(const SequenceSet& a, const SequenceSet& b) { return a.sequences == b.sequences; }
};

/// Inverse Z-transform of row or column r, padded with zeros to a common
/// length (the largest entry degree + 1, or `min_length` if larger).
template <RingScalar T>
SequenceSet<T> extract_set(const PolyMatrix<T>& mat, std::size_t r, Orientation orientation = Orientation::row,
                           std::int64_t min_length = 0) {
  const std::size_t m = mat.size();
  if (r >= m) throw Error(ErrorCode::out_of_range, "set index " + std::to_string(r));
  if (mat.min_exponent() < 0) throw Error(ErrorCode::anticausal_input, "matrix has positive powers of Z");
  const T* sample = mat.sample_coefficient();
  if (sample == nullptr) throw Error(ErrorCode::invalid_spec, "zero matrix has no sequences");
  const T zero = zero_like(*sample);
  const std::int64_t length = std::max(mat.max_exponent() + 1, min_length);
  SequenceSet<T> out;
  out.set_index = r;
  for (std::size_t s = 0; s < m; ++s) {
    const auto& entry = orientation == Orientation::row ? mat(r, s) : mat(s, r);
    std::vector<T> seq(static_cast<std::size_t>(length), zero);
    for (std::int64_t n = entry.low(); !entry.is_zero() && n <= entry.high(); ++n) {
      seq[static_cast<std::size_t>(n)] = *entry.find(n);
    }
    out.sequences.push_back(std::move(seq));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Stage-by-stage recursion

/// Builds set r one stage at a time without forming the full matrix.
///
/// Row orientation runs the chain left to right on the row vector
/// v_r^T U(0), multiplying by D(k) then U(k+1). Column orientation runs
/// right to left on U(K) v_r, multiplying by D(k) then U(k).
template <RingScalar T>
SequenceSet<T> recursive_generate(const GeneratorSpec<T>& g, std::size_t r,
                                  Orientation orientation = Orientation::row, double tol = kDefaultTolerance) {
  validate(g, tol);
  const std::size_t m = g.set_size();
  if (r >= m) throw Error(ErrorCode::out_of_range, "set index " + std::to_string(r));
  const auto delays = stage_delays(g);
  const std::size_t k_count = delays.size();
  std::vector<ZPoly<T>> x(m);

  auto mix = [&](const ConstMatrix<T>& u, bool row_vector) {
    std::vector<ZPoly<T>> y(m);
    for (std::size_t out = 0; out < m; ++out) {
      for (std::size_t in = 0; in < m; ++in) {
        const T& w = row_vector ? u(in, out) : u(out, in);
        if (!x[in].is_zero() && !is_zero(w)) y[out] += x[in].scaled(w);
      }
    }
    x = std::move(y);
  };
  auto delay = [&](const DelayVector& d) {
    for (std::size_t p = 0; p < m; ++p) x[p] = x[p].delayed(d[p]);
  };

  if (orientation == Orientation::row) {
    for (std::size_t s = 0; s < m; ++s) x[s] = ZPoly<T>::constant(g.unitaries.front()(r, s));
    for (std::size_t k = 0; k < k_count; ++k) {
      delay(delays[k]);
      mix(g.unitaries[k + 1], true);
    }
  } else {
    for (std::size_t s = 0; s < m; ++s) x[s] = ZPoly<T>::constant(g.unitaries.back()(s, r));
    for (std::size_t k = k_count; k-- > 0;) {
      delay(delays[k]);
      mix(g.unitaries[k], false);
    }
  }

  const T zero = zero_like(g.sample());
  const std::int64_t length = sequence_length(g);
  SequenceSet<T> out;
  out.set_index = r;
  out.generator_hash = generator_hash(g);
  for (const auto& p : x) {
    std::vector<T> seq(static_cast<std::size_t>(length), zero);
    for (std::int64_t n = p.low(); !p.is_zero() && n <= p.high(); ++n) seq[static_cast<std::size_t>(n)] = *p.find(n);
    out.sequences.push_back(std::move(seq));
  }
  return out;
}

/// Set r taken straight from the polynomial product.
template <RingScalar T>
SequenceSet<T> generate_set(const GeneratorSpec<T>& g, std::size_t r, Orientation orientation = Orientation::row,
                            double tol = kDefaultTolerance) {
  auto out = extract_set(build_generating_matrix(g, tol), r, orientation, sequence_length(g));
  out.generator_hash = generator_hash(g);
  return out;
}

// ---------------------------------------------------------------------------
// Radix-M evaluation of standard sets

template <RingScalar T>
const StandardDelays& require_standard(const GeneratorSpec<T>& g) {
  const auto* s = std::get_if<StandardDelays>(&g.delays);
  if (s == nullptr) throw Error(ErrorCode::not_standard, "radix-M evaluation needs standard delays");
  require_permutation(s->permutation, g.stages());
  return *s;
}

/// Element (r, s) of the time-domain generating matrix at sample n:
///
///   U(0)[r, a_0] * U(1)[a_0, a_1] * ... * U(K)[a_{K-1}, s],  a_k = d_{pi[k]}(n).
template <RingScalar T>
T rmg_element(const GeneratorSpec<T>& g, std::size_t r, std::size_t s, std::int64_t n) {
  const auto& plan = require_standard(g);
  const std::size_t m = g.set_size();
  const std::size_t k_count = g.stages();
  if (r >= m || s >= m) throw Error(ErrorCode::out_of_range, "matrix index");
  const auto d = digits(n, static_cast<std::int64_t>(m), k_count);
  std::size_t prev = r;
  T acc = one_like(g.sample());
  for (std::size_t k = 0; k < k_count; ++k) {
    const auto next = static_cast<std::size_t>(d.digits[static_cast<std::size_t>(plan.permutation[k])]);
    acc = acc * g.unitaries[k](prev, next);
    prev = next;
  }
  return acc * g.unitaries[k_count](prev, s);
}

/// The whole time-domain matrix at sample n, as U(0) * prod_k diag(v_{a_k}) U(k+1).
template <RingScalar T>
ConstMatrix<T> rmg_matrix(const GeneratorSpec<T>& g, std::int64_t n) {
  const auto& plan = require_standard(g);
  const std::size_t m = g.set_size();
  const std::size_t k_count = g.stages();
  const auto d = digits(n, static_cast<std::int64_t>(m), k_count);
  const T zero = zero_like(g.sample());
  ConstMatrix<T> out = g.unitaries.front();
  for (std::size_t k = 0; k < k_count; ++k) {
    const auto keep = static_cast<std::size_t>(d.digits[static_cast<std::size_t>(plan.permutation[k])]);
    ConstMatrix<T> selected = g.unitaries[k + 1];
    for (std::size_t row = 0; row < m; ++row) {
      if (row == keep) continue;
      for (std::size_t c = 0; c < m; ++c) selected(row, c) = zero;
    }
    out = out * selected;
  }
  return out;
}

/// Set r evaluated element by element with rmg_element.
template <RingScalar T>
SequenceSet<T> rmg_set(const GeneratorSpec<T>& g, std::size_t r, Orientation orientation = Orientation::row,
                       double tol = kDefaultTolerance) {
  validate(g, tol);
  require_standard(g);
  const std::size_t m = g.set_size();
  if (r >= m) throw Error(ErrorCode::out_of_range, "set index " + std::to_string(r));
  const std::int64_t length = sequence_length(g);
  SequenceSet<T> out;
  out.set_index = r;
  out.generator_hash = generator_hash(g);
  for (std::size_t s = 0; s < m; ++s) {
    std::vector<T> seq;
    seq.reserve(static_cast<std::size_t>(length));
    for (std::int64_t n = 0; n < length; ++n) {
      seq.push_back(orientation == Orientation::row ? rmg_element(g, r, s, n) : rmg_element(g, s, r, n));
    }
    out.sequences.push_back(std::move(seq));
  }
  return out;
}

}  // namespace pucodes
