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

// Aperiodic correlation and complementarity checks.
//
// Shift convention: the profile value at shift k is
//
//   C_{x,y}(k) = sum_n conj(x(n)) * y(n + k),
//
// the coefficient of Z^{-k} in x*(Z) * y(Z^-1). cross_correlation goes
// through polynomial algebra; brute_force_profile is the direct double
// loop and serves as its oracle.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pucodes/errors.hpp"
#include "pucodes/generator.hpp"
#include "pucodes/scalar.hpp"
#include "pucodes/zpoly.hpp"

namespace pucodes {

/// Correlation values over a contiguous shift range; zero outside it.
template <RingScalar T>
class CorrelationProfile {
 public:
  CorrelationProfile(std::int64_t min_shift, std::vector<T> values, T zero)
      : min_shift_(min_shift), values_(std::move(values)), zero_(std::move(zero)) {}

  std::int64_t min_shift() const noexcept { return min_shift_; }
  std::int64_t max_shift() const noexcept { return min_shift_ + static_cast<std::int64_t>(values_.size()) - 1; }
  const std::vector<T>& values() const noexcept { return values_; }

  const T& at(std::int64_t k) const {
    if (k < min_shift_ || k > max_shift()) return zero_;
    return values_[static_cast<std::size_t>(k - min_shift_)];
  }

  CorrelationProfile& operator+=(const CorrelationProfile& o) {
    const std::int64_t lo = std::min(min_shift_, o.min_shift_);
    const std::int64_t hi = std::max(max_shift(), o.max_shift());
    std::vector<T> merged(static_cast<std::size_t>(hi - lo + 1), zero_);
    for (std::int64_t k = lo; k <= hi; ++k) {
      auto& slot = merged[static_cast<std::size_t>(k - lo)];
      slot += at(k);
      slot += o.at(k);
    }
    min_shift_ = lo;
    values_ = std::move(merged);
    return *this;
  }

  friend bool operator==(const CorrelationProfile& a, const CorrelationProfile& b) {
    return a.min_shift_ == b.min_shift_ && a.values_ == b.values_;
  }

 private:
  std::int64_t min_shift_;
  std::vector<T> values_;
  T zero_;
};

namespace detail {

template <RingScalar T>
void require_correlatable(std::span<const T> x, std::span<const T> y) {
  if (x.empty() || y.empty()) throw Error(ErrorCode::shape_mismatch, "empty sequence");
  if (!same_kind(x.front(), y.front())) throw Error(ErrorCode::kind_mismatch, "correlation operands");
}

}  // namespace detail

/// Full aperiodic cross-correlation over shifts [-(|x|-1), |y|-1].
template <RingScalar T>
CorrelationProfile<T> cross_correlation(std::span<const T> x, std::span<const T> y) {
  detail::require_correlatable(x, y);
  const ZPoly<T> product = ZPoly<T>::from_sequence(x).paraconjugate() * ZPoly<T>::from_sequence(y);
  const T zero = zero_like(x.front());
  const std::int64_t lo = -static_cast<std::int64_t>(x.size()) + 1;
  const std::int64_t hi = static_cast<std::int64_t>(y.size()) - 1;
  std::vector<T> values(static_cast<std::size_t>(hi - lo + 1), zero);
  for (std::int64_t k = product.low(); !product.is_zero() && k <= product.high(); ++k) {
    values[static_cast<std::size_t>(k - lo)] = *product.find(k);
  }
  return {lo, std::move(values), zero};
}

template <RingScalar T>
CorrelationProfile<T> cross_correlation(const std::vector<T>& x, const std::vector<T>& y) {
  return cross_correlation(std::span<const T>(x), std::span<const T>(y));
}

template <RingScalar T>
CorrelationProfile<T> auto_correlation(std::span<const T> x) {
  return cross_correlation(x, x);
}

template <RingScalar T>
CorrelationProfile<T> auto_correlation(const std::vector<T>& x) {
  return cross_correlation(std::span<const T>(x), std::span<const T>(x));
}

/// Direct double loop, summing in ascending n.
template <RingScalar T>
CorrelationProfile<T> brute_force_profile(std::span<const T> x, std::span<const T> y) {
  detail::require_correlatable(x, y);
  const T zero = zero_like(x.front());
  const auto lx = static_cast<std::int64_t>(x.size());
  const auto ly = static_cast<std::int64_t>(y.size());
  std::vector<T> values;
  values.reserve(static_cast<std::size_t>(lx + ly - 1));
  for (std::int64_t k = -lx + 1; k <= ly - 1; ++k) {
    T acc = zero;
    for (std::int64_t n = std::max<std::int64_t>(0, -k); n < lx && n + k < ly; ++n) {
      acc += conj(x[static_cast<std::size_t>(n)]) * y[static_cast<std::size_t>(n + k)];
    }
    values.push_back(std::move(acc));
  }
  return {-lx + 1, std::move(values), zero};
}

template <RingScalar T>
CorrelationProfile<T> brute_force_profile(const std::vector<T>& x, const std::vector<T>& y) {
  return brute_force_profile(std::span<const T>(x), std::span<const T>(y));
}

// ---------------------------------------------------------------------------
// Verification

/// Absolute tolerance for float kinds, optionally scaled by L * max|x|^2.
/// Exact kinds ignore it and compare with zero exactly.
struct Tolerance {
  double absolute = kDefaultTolerance;
  bool scale_by_energy = false;

  template <RingScalar T>
  double effective(const SequenceSet<T>& set) const {
    if (!scale_by_energy) return absolute;
    double peak = 0.0;
    for (const auto& seq : set.sequences)
      for (const auto& v : seq) peak = std::max(peak, magnitude(v) * magnitude(v));
    return absolute * std::max(1.0, static_cast<double>(set.length()) * peak);
  }
};

template <RingScalar T>
struct VerificationReport {
  bool passed = false;
  std::optional<T> constant;  // shift-0 sum of a complementary set
  double worst_violation = 0.0;
  std::int64_t worst_shift = 0;
  std::optional<std::pair<std::size_t, std::size_t>> worst_pair;  // CCC: the offending pair of sets
  std::string detail;
};

namespace detail {

template <RingScalar T>
void require_rectangular(const SequenceSet<T>& set) {
  if (set.sequences.empty() || set.length() == 0) throw Error(ErrorCode::shape_mismatch, "empty sequence set");
  for (const auto& seq : set.sequences) {
    if (seq.size() != set.length()) throw Error(ErrorCode::shape_mismatch, "sequences differ in length");
  }
}

template <RingScalar T>
CorrelationProfile<T> summed_cross(const SequenceSet<T>& p, const SequenceSet<T>& q) {
  CorrelationProfile<T> sum = cross_correlation(p.sequences.front(), q.sequences.front());
  for (std::size_t i = 1; i < p.size(); ++i) sum += cross_correlation(p.sequences[i], q.sequences[i]);
  return sum;
}

}  // namespace detail

/// Sums the autocorrelations of the set; passes when every shift k != 0
/// vanishes. Reports the shift-0 sum as C and the worst sidelobe otherwise.
template <RingScalar T>
VerificationReport<T> complementarity_check(const SequenceSet<T>& set, const Tolerance& tol = {}) {
  detail::require_rectangular(set);
  const double limit = tol.effective(set);
  const CorrelationProfile<T> sum = detail::summed_cross(set, set);
  VerificationReport<T> report;
  report.constant = sum.at(0);
  report.passed = true;
  for (std::int64_t k = sum.min_shift(); k <= sum.max_shift(); ++k) {
    if (k == 0) continue;
    const T& v = sum.at(k);
    if (near_zero(v, limit)) {
      report.worst_violation = std::max(report.worst_violation, is_exact(v) ? 0.0 : magnitude(v));
      continue;
    }
    report.passed = false;
    const double mag = magnitude(v);
    if (mag > report.worst_violation || report.detail.empty()) {
      report.worst_violation = mag;
      report.worst_shift = k;
      report.detail = "autocorrelation sum nonzero at shift " + std::to_string(k);
    }
  }
  return report;
}

/// All sets complementary and, for every pair p != q, the summed
/// cross-correlation zero at every shift including 0.
template <RingScalar T>
VerificationReport<T> ccc_check(const std::vector<SequenceSet<T>>& sets, const Tolerance& tol = {}) {
  if (sets.empty()) throw Error(ErrorCode::shape_mismatch, "no sets given");
  for (const auto& s : sets) {
    detail::require_rectangular(s);
    if (s.size() != sets.front().size() || s.length() != sets.front().length() ||
        !same_kind(s.sequences.front().front(), sets.front().sequences.front().front())) {
      throw Error(ErrorCode::shape_mismatch, "sets differ in size, length or kind");
    }
  }
  VerificationReport<T> report;
  report.passed = true;
  for (std::size_t p = 0; p < sets.size(); ++p) {
    auto single = complementarity_check(sets[p], tol);
    if (p == 0) report.constant = single.constant;
    if (!single.passed) {
      if (report.passed || single.worst_violation > report.worst_violation) {
        report.worst_violation = single.worst_violation;
        report.worst_shift = single.worst_shift;
        report.worst_pair = std::make_pair(p, p);
        report.detail = "set " + std::to_string(p) + " is not complementary: " + single.detail;
      }
      report.passed = false;
    }
  }
  for (std::size_t p = 0; p < sets.size(); ++p) {
    for (std::size_t q = p + 1; q < sets.size(); ++q) {
      const double limit = std::max(tol.effective(sets[p]), tol.effective(sets[q]));
      const auto sum = detail::summed_cross(sets[p], sets[q]);
      for (std::int64_t k = sum.min_shift(); k <= sum.max_shift(); ++k) {
        const T& v = sum.at(k);
        if (near_zero(v, limit)) continue;
        const double mag = magnitude(v);
        if (report.passed || mag > report.worst_violation) {
          report.worst_violation = mag;
          report.worst_shift = k;
          report.worst_pair = std::make_pair(p, q);
          report.detail = "sets " + std::to_string(p) + " and " + std::to_string(q) +
                          " not orthogonal at shift " + std::to_string(k);
        }
        report.passed = false;
      }
    }
  }
  return report;
}

}  // namespace pucodes
