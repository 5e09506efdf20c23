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

// Constellation element types.
//
// Four scalar rings are supported: complex doubles, Gaussian integers
// a+bi, Eisenstein integers a+bw (w = e^{2 pi i/3}) and cyclotomic
// integers sum c_j zeta_N^j kept reduced modulo the N-th cyclotomic
// polynomial. The exact kinds use 64-bit coefficients; any overflow throws.
//
// Every type provides the same free-function vocabulary (conj, msq,
// is_zero, near_zero, zero_like, one_like, embed_complex, magnitude,
// is_exact, is_positive_real, same_kind, canonical_text) so that the
// polynomial and generator templates work over any of them. `Scalar` is a
// runtime-tagged union of the four that refuses mixed-kind arithmetic.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "pucodes/errors.hpp"

namespace pucodes {

inline constexpr double kDefaultTolerance = 1e-9;

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::overflow, "addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::overflow, "subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::overflow, "multiplication");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

inline std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// e^{2 pi i j/n}, exact at quarter turns.
inline std::complex<double> unit_root(std::int64_t j, std::int64_t n) {
  j = floor_mod(j, n);
  if ((4 * j) % n == 0) {
    switch (4 * j / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

inline std::string join_ints(std::span<const std::int64_t> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// ComplexFloat

class ComplexFloat {
 public:
  constexpr ComplexFloat() = default;
  constexpr ComplexFloat(double re, double im = 0.0) : value_(re, im) {}
  constexpr explicit ComplexFloat(std::complex<double> v) : value_(v) {}

  constexpr double re() const { return value_.real(); }
  constexpr double im() const { return value_.imag(); }
  constexpr std::complex<double> value() const { return value_; }

  ComplexFloat& operator+=(const ComplexFloat& o) { value_ += o.value_; return *this; }
  ComplexFloat& operator-=(const ComplexFloat& o) { value_ -= o.value_; return *this; }
  ComplexFloat& operator*=(const ComplexFloat& o) { value_ *= o.value_; return *this; }

  friend ComplexFloat operator+(ComplexFloat a, const ComplexFloat& b) { return a += b; }
  friend ComplexFloat operator-(ComplexFloat a, const ComplexFloat& b) { return a -= b; }
  friend ComplexFloat operator*(ComplexFloat a, const ComplexFloat& b) { return a *= b; }
  friend ComplexFloat operator-(const ComplexFloat& a) { return ComplexFloat(-a.value_); }
  friend bool operator==(const ComplexFloat& a, const ComplexFloat& b) { return a.value_ == b.value_; }

 private:
  std::complex<double> value_{};
};

inline ComplexFloat conj(const ComplexFloat& a) { return ComplexFloat(std::conj(a.value())); }
inline ComplexFloat msq(const ComplexFloat& a) { return ComplexFloat(std::norm(a.value()), 0.0); }
inline bool is_zero(const ComplexFloat& a) { return a.re() == 0.0 && a.im() == 0.0; }
inline bool near_zero(const ComplexFloat& a, double tol) { return std::abs(a.value()) <= tol; }
inline ComplexFloat zero_like(const ComplexFloat&) { return {}; }
inline ComplexFloat one_like(const ComplexFloat&) { return {1.0, 0.0}; }
inline ComplexFloat embed_complex(const ComplexFloat& a) { return a; }
inline double magnitude(const ComplexFloat& a) { return std::abs(a.value()); }
inline bool is_exact(const ComplexFloat&) { return false; }
inline bool is_positive_real(const ComplexFloat& a, double tol) {
  return std::abs(a.im()) <= tol && a.re() > tol;
}
inline bool same_kind(const ComplexFloat&, const ComplexFloat&) { return true; }
inline std::string canonical_text(const ComplexFloat& a) {
  // hexfloat keeps the text bit-exact
  char buf[96];
  std::snprintf(buf, sizeof buf, "f(%a,%a)", a.re(), a.im());
  return buf;
}

// ---------------------------------------------------------------------------
// GaussInt: a + b i

class GaussInt {
 public:
  constexpr GaussInt() = default;
  constexpr GaussInt(std::int64_t a, std::int64_t b = 0) : a_(a), b_(b) {}

  constexpr std::int64_t a() const { return a_; }
  constexpr std::int64_t b() const { return b_; }

  GaussInt& operator+=(const GaussInt& o) {
    a_ = detail::checked_add(a_, o.a_);
    b_ = detail::checked_add(b_, o.b_);
    return *this;
  }
  GaussInt& operator-=(const GaussInt& o) {
    a_ = detail::checked_sub(a_, o.a_);
    b_ = detail::checked_sub(b_, o.b_);
    return *this;
  }
  GaussInt& operator*=(const GaussInt& o) { return *this = *this * o; }

  friend GaussInt operator+(GaussInt x, const GaussInt& y) { return x += y; }
  friend GaussInt operator-(GaussInt x, const GaussInt& y) { return x -= y; }
  friend GaussInt operator*(const GaussInt& x, const GaussInt& y) {
    using namespace detail;
    return {checked_sub(checked_mul(x.a_, y.a_), checked_mul(x.b_, y.b_)),
            checked_add(checked_mul(x.a_, y.b_), checked_mul(x.b_, y.a_))};
  }
  friend GaussInt operator-(const GaussInt& x) {
    return {detail::checked_neg(x.a_), detail::checked_neg(x.b_)};
  }
  friend bool operator==(const GaussInt&, const GaussInt&) = default;

 private:
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
};

inline GaussInt conj(const GaussInt& x) { return {x.a(), detail::checked_neg(x.b())}; }
inline GaussInt msq(const GaussInt& x) { return x * conj(x); }
inline bool is_zero(const GaussInt& x) { return x.a() == 0 && x.b() == 0; }
inline bool near_zero(const GaussInt& x, double) { return is_zero(x); }
inline GaussInt zero_like(const GaussInt&) { return {}; }
inline GaussInt one_like(const GaussInt&) { return {1}; }
inline ComplexFloat embed_complex(const GaussInt& x) {
  return {static_cast<double>(x.a()), static_cast<double>(x.b())};
}
inline double magnitude(const GaussInt& x) { return std::abs(embed_complex(x).value()); }
inline bool is_exact(const GaussInt&) { return true; }
inline bool is_positive_real(const GaussInt& x, double) { return x.b() == 0 && x.a() > 0; }
inline bool same_kind(const GaussInt&, const GaussInt&) { return true; }
inline std::string canonical_text(const GaussInt& x) {
  return "g(" + std::to_string(x.a()) + "," + std::to_string(x.b()) + ")";
}

// ---------------------------------------------------------------------------
// EisensteinInt: a + b w with w^2 = -1 - w

class EisensteinInt {
 public:
  constexpr EisensteinInt() = default;
  constexpr EisensteinInt(std::int64_t a, std::int64_t b = 0) : a_(a), b_(b) {}

  constexpr std::int64_t a() const { return a_; }
  constexpr std::int64_t b() const { return b_; }

  EisensteinInt& operator+=(const EisensteinInt& o) {
    a_ = detail::checked_add(a_, o.a_);
    b_ = detail::checked_add(b_, o.b_);
    return *this;
  }
  EisensteinInt& operator-=(const EisensteinInt& o) {
    a_ = detail::checked_sub(a_, o.a_);
    b_ = detail::checked_sub(b_, o.b_);
    return *this;
  }
  EisensteinInt& operator*=(const EisensteinInt& o) { return *this = *this * o; }

  friend EisensteinInt operator+(EisensteinInt x, const EisensteinInt& y) { return x += y; }
  friend EisensteinInt operator-(EisensteinInt x, const EisensteinInt& y) { return x -= y; }
  // (a + bw)(c + dw) = ac + (ad + bc) w + bd w^2 = (ac - bd) + (ad + bc - bd) w
  friend EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
    using namespace detail;
    const std::int64_t bd = checked_mul(x.b_, y.b_);
    return {checked_sub(checked_mul(x.a_, y.a_), bd),
            checked_sub(checked_add(checked_mul(x.a_, y.b_), checked_mul(x.b_, y.a_)), bd)};
  }
  friend EisensteinInt operator-(const EisensteinInt& x) {
    return {detail::checked_neg(x.a_), detail::checked_neg(x.b_)};
  }
  friend bool operator==(const EisensteinInt&, const EisensteinInt&) = default;

 private:
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
};

// conj(a + b w) = a + b w^2 = (a - b) - b w
inline EisensteinInt conj(const EisensteinInt& x) {
  return {detail::checked_sub(x.a(), x.b()), detail::checked_neg(x.b())};
}
inline EisensteinInt msq(const EisensteinInt& x) { return x * conj(x); }
inline bool is_zero(const EisensteinInt& x) { return x.a() == 0 && x.b() == 0; }
inline bool near_zero(const EisensteinInt& x, double) { return is_zero(x); }
inline EisensteinInt zero_like(const EisensteinInt&) { return {}; }
inline EisensteinInt one_like(const EisensteinInt&) { return {1}; }
inline ComplexFloat embed_complex(const EisensteinInt& x) {
  const double a = static_cast<double>(x.a());
  const double b = static_cast<double>(x.b());
  return {a - 0.5 * b, b * (std::numbers::sqrt3 / 2.0)};
}
inline double magnitude(const EisensteinInt& x) { return std::abs(embed_complex(x).value()); }
inline bool is_exact(const EisensteinInt&) { return true; }
inline bool is_positive_real(const EisensteinInt& x, double) { return x.b() == 0 && x.a() > 0; }
inline bool same_kind(const EisensteinInt&, const EisensteinInt&) { return true; }
inline std::string canonical_text(const EisensteinInt& x) {
  return "e(" + std::to_string(x.a()) + "," + std::to_string(x.b()) + ")";
}

// ---------------------------------------------------------------------------
// Cyclotomic integers

/// The N-th cyclotomic polynomial, coefficients in ascending order.
/// Monic; divides x^N - 1 over the integers.
class CyclotomicBasis {
 public:
  CyclotomicBasis(int order, std::vector<std::int64_t> phi) : order_(order), phi_(std::move(phi)) {}

  int order() const noexcept { return order_; }
  int degree() const noexcept { return static_cast<int>(phi_.size()) - 1; }
  std::span<const std::int64_t> phi() const noexcept { return phi_; }

  /// Reduces `poly` in place modulo phi; entries at index >= degree end up zero.
  void reduce(std::span<std::int64_t> poly) const {
    const int d = degree();
    for (std::size_t i = poly.size(); i-- > static_cast<std::size_t>(d);) {
      const std::int64_t t = poly[i];
      if (t == 0) continue;
      const std::size_t base = i - static_cast<std::size_t>(d);
      for (int j = 0; j < d; ++j) {
        if (phi_[j] != 0) {
          poly[base + j] = detail::checked_sub(poly[base + j], detail::checked_mul(t, phi_[j]));
        }
      }
      poly[i] = 0;
    }
  }

 private:
  int order_;
  std::vector<std::int64_t> phi_;
};

namespace detail {

// Exact quotient num / den for a monic divisor den; throws if the remainder is nonzero.
inline std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num,
                                              std::span<const std::int64_t> den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw Error(ErrorCode::invalid_spec, "polynomial division degree");
  std::vector<std::int64_t> quotient(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const std::int64_t t = num[i];
    quotient[i - dd] = t;
    if (t == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] = checked_sub(num[i - dd + j], checked_mul(t, den[j]));
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (num[i] != 0) throw Error(ErrorCode::invalid_spec, "polynomial division not exact");
  }
  return quotient;
}

using BasisCache = std::map<int, std::unique_ptr<CyclotomicBasis>>;

inline const CyclotomicBasis& basis_locked(int n, BasisCache& cache) {
  if (auto it = cache.find(n); it != cache.end()) return *it->second;
  std::vector<std::int64_t> poly(static_cast<std::size_t>(n) + 1, 0);
  poly.front() = -1;
  poly.back() = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_exact(std::move(poly), basis_locked(d, cache).phi());
  }
  auto [it, inserted] = cache.emplace(n, std::make_unique<CyclotomicBasis>(n, std::move(poly)));
  return *it->second;
}

}  // namespace detail

/// Returns the cached basis for order `n`; entries live for the whole program.
inline const CyclotomicBasis& cyclotomic_basis(int n) {
  if (n < 1) throw Error(ErrorCode::out_of_range, "cyclotomic order must be >= 1");
  static std::mutex mutex;
  static detail::BasisCache cache;
  std::lock_guard lock(mutex);
  return detail::basis_locked(n, cache);
}

class Cyclotomic {
 public:
  using Coefficients = boost::container::small_vector<std::int64_t, 8>;

  /// Zero of order 1.
  Cyclotomic() : Cyclotomic(1) {}

  /// Zero of order `n`.
  explicit Cyclotomic(int n) : basis_(&cyclotomic_basis(n)), c_(static_cast<std::size_t>(basis_->degree()), 0) {}

  static Cyclotomic integer(int n, std::int64_t value) {
    Cyclotomic x(n);
    x.c_[0] = value;
    return x;
  }

  static Cyclotomic root_of_unity(int n, std::int64_t exponent) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
    c[static_cast<std::size_t>(detail::floor_mod(exponent, n))] = 1;
    return from_coefficients(n, c);
  }

  /// Interprets c[j] as the coefficient of zeta_n^j (any length) and reduces.
  static Cyclotomic from_coefficients(int n, std::span<const std::int64_t> c) {
    Cyclotomic x(n);
    std::vector<std::int64_t> buf(static_cast<std::size_t>(n), 0);
    for (std::size_t j = 0; j < c.size(); ++j) {
      auto& slot = buf[j % static_cast<std::size_t>(n)];
      slot = detail::checked_add(slot, c[j]);
    }
    x.assign_reduced(buf);
    return x;
  }

  int order() const noexcept { return basis_->order(); }
  const CyclotomicBasis& basis() const noexcept { return *basis_; }

  /// Reduced coefficients, length deg(phi_N).
  std::span<const std::int64_t> coefficients() const noexcept { return {c_.data(), c_.size()}; }

  /// Reduced coefficients zero-padded to length N.
  std::vector<std::int64_t> dense_coefficients() const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(order()), 0);
    std::copy(c_.begin(), c_.end(), out.begin());
    return out;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    require_same_order(o);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] = detail::checked_add(c_[j], o.c_[j]);
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    require_same_order(o);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] = detail::checked_sub(c_[j], o.c_[j]);
    return *this;
  }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend Cyclotomic operator+(Cyclotomic x, const Cyclotomic& y) { return x += y; }
  friend Cyclotomic operator-(Cyclotomic x, const Cyclotomic& y) { return x -= y; }
  friend Cyclotomic operator-(Cyclotomic x) {
    for (auto& v : x.c_) v = detail::checked_neg(v);
    return x;
  }
  friend Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y) {
    x.require_same_order(y);
    const std::size_t d = x.c_.size();
    Coefficients buf(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
      if (x.c_[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (y.c_[j] == 0) continue;
        buf[i + j] = detail::checked_add(buf[i + j], detail::checked_mul(x.c_[i], y.c_[j]));
      }
    }
    Cyclotomic out(x.order());
    out.assign_reduced({buf.data(), buf.size()});
    return out;
  }
  friend bool operator==(const Cyclotomic& x, const Cyclotomic& y) {
    return x.order() == y.order() && x.c_ == y.c_;
  }

  /// Complex conjugate: zeta^j -> zeta^{N-j}.
  Cyclotomic conjugate() const {
    const std::size_t n = static_cast<std::size_t>(order());
    std::vector<std::int64_t> buf(n, 0);
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (c_[j] != 0) buf[(n - j) % n] = c_[j];
    }
    Cyclotomic out(order());
    out.assign_reduced(buf);
    return out;
  }

 private:
  void require_same_order(const Cyclotomic& o) const {
    if (o.basis_ != basis_) {
      throw Error(ErrorCode::kind_mismatch, "cyclotomic orders " + std::to_string(order()) + " and " +
                                                std::to_string(o.order()));
    }
  }

  void assign_reduced(std::span<std::int64_t> buf) {
    basis_->reduce(buf);
    std::copy_n(buf.begin(), c_.size(), c_.begin());
  }

  const CyclotomicBasis* basis_;
  Coefficients c_;
};

inline Cyclotomic conj(const Cyclotomic& x) { return x.conjugate(); }
inline Cyclotomic msq(const Cyclotomic& x) { return x * x.conjugate(); }
inline bool is_zero(const Cyclotomic& x) {
  return std::all_of(x.coefficients().begin(), x.coefficients().end(), [](auto v) { return v == 0; });
}
inline bool near_zero(const Cyclotomic& x, double) { return is_zero(x); }
inline Cyclotomic zero_like(const Cyclotomic& x) { return Cyclotomic(x.order()); }
inline Cyclotomic one_like(const Cyclotomic& x) { return Cyclotomic::integer(x.order(), 1); }
inline ComplexFloat embed_complex(const Cyclotomic& x) {
  std::complex<double> acc{};
  const auto c = x.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] != 0) acc += static_cast<double>(c[j]) * detail::unit_root(static_cast<std::int64_t>(j), x.order());
  }
  return ComplexFloat(acc);
}
inline double magnitude(const Cyclotomic& x) { return std::abs(embed_complex(x).value()); }
inline bool is_exact(const Cyclotomic&) { return true; }
/// Rational integers are exactly the elements with only c[0] nonzero.
inline bool is_integer(const Cyclotomic& x) {
  const auto c = x.coefficients();
  return std::all_of(c.begin() + 1, c.end(), [](auto v) { return v == 0; });
}
// real is decided exactly; the sign comes from the standard embedding
inline bool is_positive_real(const Cyclotomic& x, double) {
  if (is_zero(x) || conj(x) != x) return false;
  return is_integer(x) ? x.coefficients()[0] > 0 : embed_complex(x).value().real() > 0;
}
inline bool same_kind(const Cyclotomic& x, const Cyclotomic& y) { return x.order() == y.order(); }
inline std::string canonical_text(const Cyclotomic& x) {
  return "c" + std::to_string(x.order()) + "[" + detail::join_ints(x.coefficients()) + "]";
}

/// Exponent e with x == zeta_N^e, if x is a root of unity of that form.
inline std::optional<int> root_exponent(const Cyclotomic& x) {
  for (int e = 0; e < x.order(); ++e) {
    if (x == Cyclotomic::root_of_unity(x.order(), e)) return e;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Runtime-tagged scalar

enum class ScalarKind { complex_float, gauss, eisenstein, cyclotomic };

/// A scalar kind together with the cyclotomic order when relevant.
struct KindSpec {
  ScalarKind kind = ScalarKind::complex_float;
  int order = 0;  // cyclotomic only

  friend bool operator==(const KindSpec&, const KindSpec&) = default;

  std::string name() const {
    switch (kind) {
      case ScalarKind::complex_float: return "complex";
      case ScalarKind::gauss: return "gauss";
      case ScalarKind::eisenstein: return "eisenstein";
      case ScalarKind::cyclotomic: return "cyclo" + std::to_string(order);
    }
    return "?";
  }
};

class Scalar {
 public:
  using Storage = std::variant<ComplexFloat, GaussInt, EisensteinInt, Cyclotomic>;

  Scalar() = default;
  Scalar(ComplexFloat v) : v_(v) {}
  Scalar(GaussInt v) : v_(v) {}
  Scalar(EisensteinInt v) : v_(v) {}
  Scalar(Cyclotomic v) : v_(std::move(v)) {}

  ScalarKind kind() const noexcept { return static_cast<ScalarKind>(v_.index()); }

  KindSpec kind_spec() const {
    if (const auto* c = std::get_if<Cyclotomic>(&v_)) return {ScalarKind::cyclotomic, c->order()};
    return {kind(), 0};
  }

  const Storage& storage() const noexcept { return v_; }

  template <class T>
  const T& as() const {
    if (const T* p = std::get_if<T>(&v_)) return *p;
    throw Error(ErrorCode::kind_mismatch, "scalar is " + kind_spec().name());
  }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x + y; });
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x - y; });
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x * y; });
  }
  friend Scalar operator-(const Scalar& a) {
    return std::visit([](const auto& x) { return Scalar(-x); }, a.v_);
  }
  friend bool operator==(const Scalar& a, const Scalar& b) = default;

 private:
  template <class Op>
  static Scalar binary(const Scalar& a, const Scalar& b, Op op) {
    return std::visit(
        [&](const auto& x, const auto& y) -> Scalar {
          using X = std::decay_t<decltype(x)>;
          using Y = std::decay_t<decltype(y)>;
          if constexpr (std::is_same_v<X, Y>) {
            return Scalar(op(x, y));
          } else {
            throw Error(ErrorCode::kind_mismatch, a.kind_spec().name() + " with " + b.kind_spec().name());
          }
        },
        a.v_, b.v_);
  }

  Storage v_;
};

inline Scalar conj(const Scalar& a) {
  return std::visit([](const auto& x) { return Scalar(conj(x)); }, a.storage());
}
inline Scalar msq(const Scalar& a) {
  return std::visit([](const auto& x) { return Scalar(msq(x)); }, a.storage());
}
inline bool is_zero(const Scalar& a) {
  return std::visit([](const auto& x) { return is_zero(x); }, a.storage());
}
inline bool near_zero(const Scalar& a, double tol) {
  return std::visit([tol](const auto& x) { return near_zero(x, tol); }, a.storage());
}
inline Scalar zero_like(const Scalar& a) {
  return std::visit([](const auto& x) { return Scalar(zero_like(x)); }, a.storage());
}
inline Scalar one_like(const Scalar& a) {
  return std::visit([](const auto& x) { return Scalar(one_like(x)); }, a.storage());
}
inline ComplexFloat embed_complex(const Scalar& a) {
  return std::visit([](const auto& x) { return embed_complex(x); }, a.storage());
}
inline double magnitude(const Scalar& a) {
  return std::visit([](const auto& x) { return magnitude(x); }, a.storage());
}
inline bool is_exact(const Scalar& a) {
  return std::visit([](const auto& x) { return is_exact(x); }, a.storage());
}
inline bool is_positive_real(const Scalar& a, double tol) {
  return std::visit([tol](const auto& x) { return is_positive_real(x, tol); }, a.storage());
}
inline bool same_kind(const Scalar& a, const Scalar& b) { return a.kind_spec() == b.kind_spec(); }
inline std::string canonical_text(const Scalar& a) {
  return std::visit([](const auto& x) { return canonical_text(x); }, a.storage());
}

/// Zero and one of a given kind.
inline Scalar zero_of(const KindSpec& k) {
  switch (k.kind) {
    case ScalarKind::complex_float: return ComplexFloat{};
    case ScalarKind::gauss: return GaussInt{};
    case ScalarKind::eisenstein: return EisensteinInt{};
    case ScalarKind::cyclotomic: return Cyclotomic(k.order);
  }
  return {};
}
inline Scalar one_of(const KindSpec& k) { return one_like(zero_of(k)); }

// ---------------------------------------------------------------------------
// Concept shared by every template in the library

template <class T>
concept RingScalar = std::copyable<T> && std::equality_comparable<T> &&
                     requires(const T& a, const T& b, T& acc, double tol) {
                       { a + b } -> std::convertible_to<T>;
                       { a - b } -> std::convertible_to<T>;
                       { a * b } -> std::convertible_to<T>;
                       { -a } -> std::convertible_to<T>;
                       { acc += a } -> std::same_as<T&>;
                       { conj(a) } -> std::convertible_to<T>;
                       { msq(a) } -> std::convertible_to<T>;
                       { is_zero(a) } -> std::convertible_to<bool>;
                       { near_zero(a, tol) } -> std::convertible_to<bool>;
                       { zero_like(a) } -> std::convertible_to<T>;
                       { one_like(a) } -> std::convertible_to<T>;
                       { embed_complex(a) } -> std::convertible_to<ComplexFloat>;
                       { magnitude(a) } -> std::convertible_to<double>;
                       { is_exact(a) } -> std::convertible_to<bool>;
                       { is_positive_real(a, tol) } -> std::convertible_to<bool>;
                       { same_kind(a, b) } -> std::convertible_to<bool>;
                       { canonical_text(a) } -> std::convertible_to<std::string>;
                     };

// ---------------------------------------------------------------------------
// Explicit conversions between kinds

namespace detail {

inline std::optional<std::int64_t> as_rational_integer(const Scalar& s) {
  if (const auto* g = std::get_if<GaussInt>(&s.storage())) {
    if (g->b() == 0) return g->a();
  } else if (const auto* e = std::get_if<EisensteinInt>(&s.storage())) {
    if (e->b() == 0) return e->a();
  } else if (const auto* c = std::get_if<Cyclotomic>(&s.storage())) {
    if (is_integer(*c)) return c->coefficients()[0];
  }
  return std::nullopt;
}

}  // namespace detail

/// Explicit kind conversion. Supported: identity; exact -> complex
/// (embedding); gauss <-> cyclo4; eisenstein <-> cyclo3; cyclo N -> cyclo kN;
/// rational integers of any exact kind -> any exact kind.
inline Scalar convert(const Scalar& s, const KindSpec& target) {
  const KindSpec from = s.kind_spec();
  if (from == target) return s;
  if (target.kind == ScalarKind::complex_float) return embed_complex(s);
  if (from.kind == ScalarKind::complex_float) {
    throw Error(ErrorCode::kind_mismatch, "no exact conversion from complex");
  }
  if (auto v = detail::as_rational_integer(s)) {
    switch (target.kind) {
      case ScalarKind::gauss: return GaussInt(*v);
      case ScalarKind::eisenstein: return EisensteinInt(*v);
      case ScalarKind::cyclotomic: return Cyclotomic::integer(target.order, *v);
      default: break;
    }
  }
  if (from.kind == ScalarKind::gauss && target.kind == ScalarKind::cyclotomic && target.order % 4 == 0) {
    const auto& g = s.as<GaussInt>();
    const std::int64_t c[] = {g.a(), g.b()};
    return convert(Cyclotomic::from_coefficients(4, c), target);
  }
  if (from.kind == ScalarKind::eisenstein && target.kind == ScalarKind::cyclotomic && target.order % 3 == 0) {
    const auto& e = s.as<EisensteinInt>();
    const std::int64_t c[] = {e.a(), e.b()};
    return convert(Cyclotomic::from_coefficients(3, c), target);
  }
  if (from.kind == ScalarKind::cyclotomic) {
    const auto& c = s.as<Cyclotomic>();
    if (target.kind == ScalarKind::cyclotomic && target.order % from.order == 0) {
      const int k = target.order / from.order;
      std::vector<std::int64_t> lifted(static_cast<std::size_t>(target.order), 0);
      const auto src = c.coefficients();
      for (std::size_t j = 0; j < src.size(); ++j) lifted[j * static_cast<std::size_t>(k)] = src[j];
      return Cyclotomic::from_coefficients(target.order, lifted);
    }
    if (target.kind == ScalarKind::gauss && from.order == 4) {
      const auto v = c.coefficients();  // phi_4 = x^2 + 1
      return GaussInt(v[0], v[1]);
    }
    if (target.kind == ScalarKind::eisenstein && from.order == 3) {
      const auto v = c.coefficients();  // phi_3 = x^2 + x + 1
      return EisensteinInt(v[0], v[1]);
    }
  }
  throw Error(ErrorCode::kind_mismatch, "no exact conversion from " + from.name() + " to " + target.name());
}

}  // namespace pucodes
