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

// Catalog of unitary matrices over the supported constellations.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pucodes/errors.hpp"
#include "pucodes/generator.hpp"
#include "pucodes/scalar.hpp"
#include "pucodes/zpoly.hpp"

namespace pucodes {

template <RingScalar T>
struct UnitaryCatalogEntry {
  std::string name;
  ConstMatrix<T> matrix;
  T constant;  // U U^H = constant * I

  std::size_t size() const noexcept { return matrix.size(); }
};

/// Validates `matrix` and wraps it; throws invalid_spec if it is not unitary.
template <RingScalar T>
UnitaryCatalogEntry<T> make_catalog_entry(std::string name, ConstMatrix<T> matrix, double tol = kDefaultTolerance) {
  auto c = unitary_constant(matrix, tol);
  if (!c) throw Error(ErrorCode::invalid_spec, name + " is not unitary");
  return {std::move(name), std::move(matrix), std::move(*c)};
}

/// F[p][q] = zeta_M^{pq}, exact in Cyclotomic(M); C = M.
inline UnitaryCatalogEntry<Cyclotomic> dft_matrix(std::size_t m) {
  if (m < 1) throw Error(ErrorCode::out_of_range, "DFT size must be >= 1");
  const int n = static_cast<int>(m);
  ConstMatrix<Cyclotomic> f(m, Cyclotomic(n));
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) f(p, q) = Cyclotomic::root_of_unity(n, static_cast<std::int64_t>(p * q));
  return make_catalog_entry("dft", std::move(f));
}

/// Sylvester construction H_{2n} = H_2 (x) H_n of size 2^m; C = 2^m.
inline UnitaryCatalogEntry<GaussInt> hadamard_sylvester(std::size_t m) {
  if (m > 20) throw Error(ErrorCode::out_of_range, "Hadamard order too large");
  ConstMatrix<GaussInt> h{{GaussInt(1)}};
  for (std::size_t level = 0; level < m; ++level) {
    const std::size_t n = h.size();
    ConstMatrix<GaussInt> next(2 * n, GaussInt(0));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        next(r, c) = h(r, c);
        next(r, c + n) = h(r, c);
        next(r + n, c) = h(r, c);
        next(r + n, c + n) = -h(r, c);
      }
    }
    h = std::move(next);
  }
  return make_catalog_entry("hadamard", std::move(h));
}

/// 3x3 unitary over the Gaussian integers, for rectangular QAM sets; C = 16.
inline UnitaryCatalogEntry<GaussInt> qam3_gaussian() {
  using G = GaussInt;
  return make_catalog_entry("qam3-paper", ConstMatrix<G>{{G(2, 2), G(2), G(2)},
                                                          {G(2), G(-1, 3), G(-1, -1)},
                                                          {G(2), G(-1, -1), G(-1, 3)}});
}

/// 3x3 unitary over the Eisenstein integers, for hexagonal sets; C = 12.
inline UnitaryCatalogEntry<EisensteinInt> hexagonal3_eisenstein() {
  using E = EisensteinInt;
  return make_catalog_entry("eisenstein3-paper", ConstMatrix<E>{{E(2), E(2), E(2)},
                                                                 {E(2), E(-2, 1), E(0, -1)},
                                                                 {E(2), E(0, -1), E(-2, 1)}});
}

/// Exact kinds: the unit-modulus elements, i.e. the representable roots
/// of unity. Floats: |msq - 1| <= tol.
template <RingScalar T>
bool is_unit_phase(const T& phase, double tol = kDefaultTolerance) {
  return near_zero(msq(phase) - one_like(phase), tol);
}

/// out(r, c) = row_phases[r] * col_phases[c] * U(row_perm[r], col_perm[c]).
/// Empty permutations / phase lists stand for the identity.
template <RingScalar T>
UnitaryCatalogEntry<T> equivalence_transform(const UnitaryCatalogEntry<T>& entry, std::vector<int> row_perm,
                                             std::vector<int> col_perm, std::vector<T> row_phases,
                                             std::vector<T> col_phases, double tol = kDefaultTolerance) {
  const std::size_t m = entry.size();
  const T one = one_like(entry.constant);
  if (row_perm.empty()) row_perm = identity_permutation(m);
  if (col_perm.empty()) col_perm = identity_permutation(m);
  if (row_phases.empty()) row_phases.assign(m, one);
  if (col_phases.empty()) col_phases.assign(m, one);
  require_permutation(row_perm, m);
  require_permutation(col_perm, m);
  if (row_phases.size() != m || col_phases.size() != m) throw Error(ErrorCode::size_mismatch, "phase list size");
  for (const auto* list : {&row_phases, &col_phases}) {
    for (const auto& p : *list) {
      if (!same_kind(p, one)) throw Error(ErrorCode::kind_mismatch, "phase kind");
      if (!is_unit_phase(p, tol)) throw Error(ErrorCode::non_unit_phase, canonical_text(p));
    }
  }
  ConstMatrix<T> out = entry.matrix;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c)
      out(r, c) = row_phases[r] * col_phases[c] *
                  entry.matrix(static_cast<std::size_t>(row_perm[r]), static_cast<std::size_t>(col_perm[c]));
  return make_catalog_entry(entry.name, std::move(out), tol);
}

// ---------------------------------------------------------------------------
// Lookup by name

inline constexpr std::array<std::string_view, 4> kCatalogNames = {"dft", "hadamard", "qam3-paper",
                                                                  "eisenstein3-paper"};

template <RingScalar T>
ConstMatrix<Scalar> to_scalar_matrix(const ConstMatrix<T>& u) {
  return u.map([](const T& v) { return Scalar(v); });
}

/// Converts a matrix entrywise to `kind`; throws kind_mismatch when some
/// entry has no exact image there.
inline ConstMatrix<Scalar> convert_matrix(const ConstMatrix<Scalar>& u, const KindSpec& kind) {
  return u.map([&](const Scalar& v) { return convert(v, kind); });
}

/// Catalog entry `name` of size m, expressed in `kind`.
inline UnitaryCatalogEntry<Scalar> catalog_lookup(std::string_view name, std::size_t m, const KindSpec& kind) {
  ConstMatrix<Scalar> base;
  if (name == "dft") {
    base = to_scalar_matrix(dft_matrix(m).matrix);
  } else if (name == "hadamard") {
    std::size_t order = 0;
    while ((std::size_t{1} << order) < m) ++order;
    if ((std::size_t{1} << order) != m) throw Error(ErrorCode::invalid_spec, "hadamard size must be a power of 2");
    base = to_scalar_matrix(hadamard_sylvester(order).matrix);
  } else if (name == "qam3-paper" || name == "eisenstein3-paper") {
    if (m != 3) throw Error(ErrorCode::invalid_spec, std::string(name) + " is 3x3");
    base = name == "qam3-paper" ? to_scalar_matrix(qam3_gaussian().matrix)
                                : to_scalar_matrix(hexagonal3_eisenstein().matrix);
  } else {
    throw Error(ErrorCode::invalid_spec, "unknown catalog matrix '" + std::string(name) + "'");
  }
  return make_catalog_entry(std::string(name), convert_matrix(base, kind));
}

}  // namespace pucodes
