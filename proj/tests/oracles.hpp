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

// Independent reference computations for the tests. Everything here works
// in std::complex<double> or plain integers and shares no code path with
// the library beyond reading its results.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "pucodes/pucodes.hpp"

namespace oracle {

using cd = std::complex<double>;
using CVec = std::vector<cd>;
using CMat = std::vector<std::vector<cd>>;

inline cd root(std::int64_t j, std::int64_t n) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n));
}

// Complex value of each scalar kind, written out from its definition.
inline cd value(const pucodes::GaussInt& g) { return {static_cast<double>(g.a()), static_cast<double>(g.b())}; }
inline cd value(const pucodes::EisensteinInt& e) {
  return static_cast<double>(e.a()) + static_cast<double>(e.b()) * root(1, 3);
}
inline cd value(const pucodes::Cyclotomic& c) {
  cd acc{};
  const auto k = c.coefficients();
  for (std::size_t j = 0; j < k.size(); ++j) acc += static_cast<double>(k[j]) * root(static_cast<std::int64_t>(j), c.order());
  return acc;
}
inline cd value(const pucodes::ComplexFloat& f) { return f.value(); }

template <class T>
CVec values(const std::vector<T>& xs) {
  CVec out;
  for (const auto& x : xs) out.push_back(value(x));
  return out;
}

/// Phi_n by multiplying out prod over primitive k of (x - zeta^k) numerically
/// and rounding; fine for the small orders tested.
inline std::vector<std::int64_t> cyclotomic_poly(int n) {
  CVec poly{1.0};
  for (int k = 1; k <= n; ++k) {
    int a = k, b = n;
    while (b) {
      const int t = a % b;
      a = b;
      b = t;
    }
    if (a != 1) continue;
    CVec next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * root(k, n);
    }
    poly = std::move(next);
  }
  std::vector<std::int64_t> out;
  for (const auto& c : poly) out.push_back(static_cast<std::int64_t>(std::llround(c.real())));
  return out;
}

/// Aperiodic sum_n conj(x[n]) y[n+k] by the double loop, k in [-(|x|-1), |y|-1].
inline cd correlation(const CVec& x, const CVec& y, std::int64_t k) {
  cd acc{};
  for (std::int64_t n = 0; n < static_cast<std::int64_t>(x.size()); ++n) {
    const std::int64_t j = n + k;
    if (j >= 0 && j < static_cast<std::int64_t>(y.size())) acc += std::conj(x[static_cast<std::size_t>(n)]) * y[static_cast<std::size_t>(j)];
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Generating matrix as complex polynomial matrices (coefficient of Z^-n at n)

using PolyMat = std::vector<std::vector<CVec>>;

inline CVec poly_add(const CVec& a, const CVec& b) {
  CVec out(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

inline CVec poly_mul(const CVec& a, const CVec& b) {
  if (a.empty() || b.empty()) return {};
  CVec out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline PolyMat mat_mul(const PolyMat& a, const PolyMat& b) {
  const std::size_t m = a.size();
  PolyMat out(m, std::vector<CVec>(m));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t k = 0; k < m; ++k) out[r][c] = poly_add(out[r][c], poly_mul(a[r][k], b[k][c]));
  return out;
}

template <class T>
PolyMat constant(const pucodes::ConstMatrix<T>& u) {
  PolyMat out(u.size(), std::vector<CVec>(u.size()));
  for (std::size_t r = 0; r < u.size(); ++r)
    for (std::size_t c = 0; c < u.size(); ++c) out[r][c] = {value(u(r, c))};
  return out;
}

inline PolyMat delays(const std::vector<std::int64_t>& d) {
  PolyMat out(d.size(), std::vector<CVec>(d.size()));
  for (std::size_t m = 0; m < d.size(); ++m) {
    out[m][m] = CVec(static_cast<std::size_t>(d[m]) + 1, 0.0);
    out[m][m].back() = 1.0;
  }
  return out;
}

/// U0 * diag(Z^-D0) * U1 * ... with the delays given per stage.
template <class T>
PolyMat generating_matrix(const std::vector<pucodes::ConstMatrix<T>>& us,
                          const std::vector<std::vector<std::int64_t>>& stage_delays) {
  PolyMat out = constant(us.front());
  for (std::size_t k = 0; k < stage_delays.size(); ++k) {
    out = mat_mul(out, delays(stage_delays[k]));
    out = mat_mul(out, constant(us[k + 1]));
  }
  return out;
}

/// Standard delays written out directly: stage k uses m * M^pi[k].
inline std::vector<std::vector<std::int64_t>> standard_delays(std::size_t m, const std::vector<int>& pi) {
  std::vector<std::vector<std::int64_t>> out;
  for (int p : pi) {
    std::int64_t step = 1;
    for (int i = 0; i < p; ++i) step *= static_cast<std::int64_t>(m);
    std::vector<std::int64_t> d;
    for (std::size_t i = 0; i < m; ++i) d.push_back(static_cast<std::int64_t>(i) * step);
    out.push_back(std::move(d));
  }
  return out;
}

inline cd coefficient(const CVec& p, std::size_t n) { return n < p.size() ? p[n] : cd{}; }

/// Exponent table mu_{r,s}(n) = r d0 + d0 d1 + d1 s mod 3 for the 3 x 3 DFT, K = 2.
inline int dft3_exponent(int r, int s, int n) {
  const int d0 = n % 3;
  const int d1 = n / 3;
  return (r * d0 + d0 * d1 + d1 * s) % 3;
}

inline bool near(cd a, cd b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

}  // namespace oracle
