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

// Laurent polynomials in Z^-1 and square matrices of them.
//
// ZPoly stores sum_k c(k) Z^{-k} densely: `low()` is the smallest k with a
// nonzero coefficient and coefficients()[i] multiplies Z^{-(low()+i)}.
// Leading and trailing zeros are always trimmed, so two polynomials are
// equal exactly when their representations are.

#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pucodes/errors.hpp"
#include "pucodes/scalar.hpp"

namespace pucodes {

template <RingScalar T>
class ZPoly {
 public:
  ZPoly() = default;

  /// coeffs[i] is the coefficient of Z^{-(low + i)}.
  ZPoly(std::int64_t low, std::vector<T> coeffs) : low_(low), coeffs_(std::move(coeffs)) { normalize(); }

  static ZPoly constant(T c) { return ZPoly(0, {std::move(c)}); }
  static ZPoly monomial(T c, std::int64_t delay) { return ZPoly(delay, {std::move(c)}); }

  /// Z-transform of a causal sequence.
  static ZPoly from_sequence(std::span<const T> x) { return ZPoly(0, std::vector<T>(x.begin(), x.end())); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::int64_t low() const noexcept { return low_; }
  std::int64_t high() const noexcept { return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const std::vector<T>& coefficients() const noexcept { return coeffs_; }

  /// Coefficient of Z^{-k}, or nullptr when k is outside the stored range.
  const T* find(std::int64_t k) const noexcept {
    if (is_zero() || k < low_ || k > high()) return nullptr;
    return &coeffs_[static_cast<std::size_t>(k - low_)];
  }

  T coefficient(std::int64_t k, const T& zero) const {
    const T* p = find(k);
    return p ? *p : zero;
  }

  bool is_constant() const noexcept { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }
  bool is_causal() const noexcept { return is_zero() || low_ >= 0; }

  /// Conjugates every coefficient and maps Z -> Z^-1.
  ZPoly paraconjugate() const {
    if (is_zero()) return {};
    std::vector<T> out;
    out.reserve(coeffs_.size());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out.push_back(conj(*it));
    return ZPoly(-high(), std::move(out));
  }

  /// Multiplication by Z^{-d}.
  ZPoly delayed(std::int64_t d) const {
    ZPoly out = *this;
    if (!out.is_zero()) out.low_ += d;
    return out;
  }

  ZPoly scaled(const T& s) const {
    std::vector<T> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c * s);
    return ZPoly(low_, std::move(out));
  }

  ZPoly& operator+=(const ZPoly& o) { return *this = add(*this, o, false); }
  ZPoly& operator-=(const ZPoly& o) { return *this = add(*this, o, true); }

  friend ZPoly operator+(const ZPoly& a, const ZPoly& b) { return add(a, b, false); }
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b) { return add(a, b, true); }
  friend ZPoly operator-(const ZPoly& a) { return ZPoly{} - a; }

  friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (!same_kind(a.coeffs_.front(), b.coeffs_.front())) {
      throw Error(ErrorCode::kind_mismatch, "polynomial product");
    }
    std::vector<T> out(a.size() + b.size() - 1, zero_like(a.coeffs_.front()));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (pucodes::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (pucodes::is_zero(b.coeffs_[j])) continue;
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return ZPoly(a.low_ + b.low_, std::move(out));
  }

  friend bool operator==(const ZPoly&, const ZPoly&) = default;

 private:
  static ZPoly add(const ZPoly& a, const ZPoly& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) {
      if (!subtract) return b;
      std::vector<T> neg;
      neg.reserve(b.size());
      for (const auto& c : b.coeffs_) neg.push_back(-c);
      return ZPoly(b.low_, std::move(neg));
    }
    if (!same_kind(a.coeffs_.front(), b.coeffs_.front())) {
      throw Error(ErrorCode::kind_mismatch, "polynomial sum");
    }
    const std::int64_t lo = std::min(a.low_, b.low_);
    const std::int64_t hi = std::max(a.high(), b.high());
    std::vector<T> out(static_cast<std::size_t>(hi - lo + 1), zero_like(a.coeffs_.front()));
    for (std::size_t i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(a.low_ - lo) + i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.size(); ++i) {
      auto& slot = out[static_cast<std::size_t>(b.low_ - lo) + i];
      slot = subtract ? slot - b.coeffs_[i] : slot + b.coeffs_[i];
    }
    return ZPoly(lo, std::move(out));
  }

  void normalize() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const T& c) { return !pucodes::is_zero(c); });
    if (first == coeffs_.end()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const T& c) { return !pucodes::is_zero(c); });
    coeffs_.erase(last.base(), coeffs_.end());
    low_ += first - coeffs_.begin();
    coeffs_.erase(coeffs_.begin(), first);
  }

  std::int64_t low_ = 0;
  std::vector<T> coeffs_;
};

template <RingScalar T>
ZPoly<T> poly_mul(const ZPoly<T>& a, const ZPoly<T>& b) {
  return a * b;
}

// ---------------------------------------------------------------------------
// Constant matrices

/// Dense M x M matrix of scalars, row-major.
template <RingScalar T>
class ConstMatrix {
 public:
  ConstMatrix() = default;
  ConstMatrix(std::size_t m, const T& fill) : m_(m), data_(m * m, fill) {}
  ConstMatrix(std::initializer_list<std::initializer_list<T>> rows) {
    m_ = rows.size();
    data_.reserve(m_ * m_);
    for (const auto& r : rows) {
      if (r.size() != m_) throw Error(ErrorCode::size_mismatch, "matrix must be square");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static ConstMatrix from_rows(const std::vector<std::vector<T>>& rows) {
    ConstMatrix out;
    out.m_ = rows.size();
    for (const auto& r : rows) {
      if (r.size() != out.m_) throw Error(ErrorCode::size_mismatch, "matrix must be square");
      out.data_.insert(out.data_.end(), r.begin(), r.end());
    }
    return out;
  }

  std::size_t size() const noexcept { return m_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * m_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * m_ + c]; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * m_, m_}; }
  const std::vector<T>& data() const noexcept { return data_; }

  ConstMatrix transpose() const {
    ConstMatrix out = *this;
    for (std::size_t r = 0; r < m_; ++r)
      for (std::size_t c = 0; c < m_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  ConstMatrix hermitian() const {
    ConstMatrix out = *this;
    for (std::size_t r = 0; r < m_; ++r)
      for (std::size_t c = 0; c < m_; ++c) out(c, r) = conj((*this)(r, c));
    return out;
  }

  template <class F>
  auto map(F&& f) const {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    ConstMatrix<U> out(m_, f(data_.front()));
    for (std::size_t i = 0; i < data_.size(); ++i) out(i / m_, i % m_) = f(data_[i]);
    return out;
  }

  friend ConstMatrix operator*(const ConstMatrix& a, const ConstMatrix& b) {
    if (a.m_ != b.m_) throw Error(ErrorCode::size_mismatch, "constant matrix product");
    ConstMatrix out(a.m_, zero_like(a.data_.front()));
    for (std::size_t r = 0; r < a.m_; ++r)
      for (std::size_t k = 0; k < a.m_; ++k)
        for (std::size_t c = 0; c < a.m_; ++c) out(r, c) += a(r, k) * b(k, c);
    return out;
  }

  friend bool operator==(const ConstMatrix&, const ConstMatrix&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<T> data_;
};

/// Returns C when U * U^H == C * I with C positive real, otherwise nullopt.
/// Exact kinds compare exactly; floats use |.| <= tol.
template <RingScalar T>
std::optional<T> unitary_constant(const ConstMatrix<T>& u, double tol = kDefaultTolerance) {
  if (u.size() == 0) return std::nullopt;
  const ConstMatrix<T> g = u * u.hermitian();
  const T c = g(0, 0);
  if (!is_positive_real(c, tol)) return std::nullopt;
  for (std::size_t r = 0; r < u.size(); ++r) {
    for (std::size_t k = 0; k < u.size(); ++k) {
      const T expected = r == k ? c : zero_like(c);
      if (!near_zero(g(r, k) - expected, tol)) return std::nullopt;
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Polynomial matrices

template <RingScalar T>
class PolyMatrix {
 public:
  PolyMatrix() = default;

  /// Zero matrix.
  explicit PolyMatrix(std::size_t m) : m_(m), entries_(m * m) {}

  static PolyMatrix identity(std::size_t m, const T& one) {
    PolyMatrix out(m);
    for (std::size_t i = 0; i < m; ++i) out(i, i) = ZPoly<T>::constant(one);
    return out;
  }

  static PolyMatrix from_constant(const ConstMatrix<T>& u) {
    PolyMatrix out(u.size());
    for (std::size_t r = 0; r < u.size(); ++r)
      for (std::size_t c = 0; c < u.size(); ++c) out(r, c) = ZPoly<T>::constant(u(r, c));
    return out;
  }

  std::size_t size() const noexcept { return m_; }
  ZPoly<T>& operator()(std::size_t r, std::size_t c) { return entries_[r * m_ + c]; }
  const ZPoly<T>& operator()(std::size_t r, std::size_t c) const { return entries_[r * m_ + c]; }

  /// Any nonzero coefficient; used to recover the scalar kind.
  const T* sample_coefficient() const noexcept {
    for (const auto& e : entries_)
      if (!e.is_zero()) return &e.coefficients().front();
    return nullptr;
  }

  /// Smallest / largest exponent k of Z^{-k} over all nonzero entries.
  std::int64_t min_exponent() const {
    std::optional<std::int64_t> v;
    for (const auto& e : entries_)
      if (!e.is_zero()) v = v ? std::min(*v, e.low()) : e.low();
    return v.value_or(0);
  }
  std::int64_t max_exponent() const {
    std::optional<std::int64_t> v;
    for (const auto& e : entries_)
      if (!e.is_zero()) v = v ? std::max(*v, e.high()) : e.high();
    return v.value_or(0);
  }

  PolyMatrix transpose() const {
    PolyMatrix out(m_);
    for (std::size_t r = 0; r < m_; ++r)
      for (std::size_t c = 0; c < m_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  /// Paraconjugate: transpose, conjugate coefficients, Z -> Z^-1.
  PolyMatrix tilde() const {
    PolyMatrix out(m_);
    for (std::size_t r = 0; r < m_; ++r)
      for (std::size_t c = 0; c < m_; ++c) out(c, r) = (*this)(r, c).paraconjugate();
    return out;
  }

  /// Multiplies every entry by Z^{-d}.
  PolyMatrix delayed(std::int64_t d) const {
    PolyMatrix out = *this;
    for (auto& e : out.entries_) e = e.delayed(d);
    return out;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.m_ != b.m_) {
      throw Error(ErrorCode::size_mismatch,
                  "matrix sizes " + std::to_string(a.m_) + " and " + std::to_string(b.m_));
    }
    PolyMatrix out(a.m_);
    for (std::size_t r = 0; r < a.m_; ++r) {
      for (std::size_t k = 0; k < a.m_; ++k) {
        const auto& lhs = a(r, k);
        if (lhs.is_zero()) continue;
        for (std::size_t c = 0; c < a.m_; ++c) {
          const auto& rhs = b(k, c);
          if (!rhs.is_zero()) out(r, c) += lhs * rhs;
        }
      }
    }
    return out;
  }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<ZPoly<T>> entries_;
};

template <RingScalar T>
PolyMatrix<T> matrix_mul(const PolyMatrix<T>& a, const PolyMatrix<T>& b) {
  return a * b;
}

template <RingScalar T>
PolyMatrix<T> tilde(const PolyMatrix<T>& a) {
  return a.tilde();
}

// ---------------------------------------------------------------------------
// Delay matrices

/// Per-port delays D_m >= 0 of one recursion stage.
struct DelayVector {
  std::vector<std::int64_t> delays;

  DelayVector() = default;
  explicit DelayVector(std::vector<std::int64_t> d) : delays(std::move(d)) {
    for (auto v : delays)
      if (v < 0) throw Error(ErrorCode::out_of_range, "delays must be nonnegative");
  }
  DelayVector(std::initializer_list<std::int64_t> d) : DelayVector(std::vector<std::int64_t>(d)) {}

  std::size_t size() const noexcept { return delays.size(); }
  std::int64_t operator[](std::size_t m) const { return delays[m]; }
  std::int64_t max() const { return delays.empty() ? 0 : *std::max_element(delays.begin(), delays.end()); }

  friend bool operator==(const DelayVector&, const DelayVector&) = default;
};

/// diag(Z^{-D_0}, ..., Z^{-D_{M-1}}).
template <RingScalar T>
PolyMatrix<T> delay_matrix(const DelayVector& d, const T& one) {
  PolyMatrix<T> out(d.size());
  for (std::size_t m = 0; m < d.size(); ++m) out(m, m) = ZPoly<T>::monomial(one, d[m]);
  return out;
}

/// [0, d, 2d, ..., (M-1)d].
inline DelayVector regular_delays(std::size_t m, std::int64_t d) {
  if (d < 0) throw Error(ErrorCode::out_of_range, "regular delay step must be nonnegative");
  std::vector<std::int64_t> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = detail::checked_mul(static_cast<std::int64_t>(i), d);
  return DelayVector(std::move(out));
}

// ---------------------------------------------------------------------------
// Paraunitarity

template <RingScalar T>
struct ParaunitaryCheck {
  bool paraunitary = false;
  std::optional<T> constant;
};

/// Checks A * tilde(A) == C * I with C a positive real constant.
///
/// Off-diagonal residue or a non-positive C yields `paraunitary == false`.
/// Throws non_constant_diagonal when the product has a clean off-diagonal
/// part but its diagonal entries are not one common constant.
template <RingScalar T>
ParaunitaryCheck<T> is_paraunitary(const PolyMatrix<T>& a, double tol = kDefaultTolerance) {
  const std::size_t m = a.size();
  const PolyMatrix<T> g = a * a.tilde();
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      if (r == c) continue;
      for (const auto& v : g(r, c).coefficients())
        if (!near_zero(v, tol)) return {};
    }
  }
  std::optional<T> constant;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& d = g(r, r);
    // float residue away from shift 0 is tolerated within tol
    const T* c0 = d.find(0);
    for (std::int64_t k = d.low(); !d.is_zero() && k <= d.high(); ++k) {
      if (k != 0 && !near_zero(*d.find(k), tol)) {
        throw Error(ErrorCode::non_constant_diagonal, "diagonal entry " + std::to_string(r) + " depends on Z");
      }
    }
    if (c0 == nullptr) return {};
    if (!constant) {
      constant = *c0;
    } else if (!near_zero(*c0 - *constant, tol)) {
      throw Error(ErrorCode::non_constant_diagonal, "diagonal entries differ");
    }
  }
  if (!constant || !is_positive_real(*constant, tol)) return {};
  return {true, constant};
}

}  // namespace pucodes
