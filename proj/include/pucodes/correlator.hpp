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

// Efficient MIMO matched filter for a generating matrix.
//
// The causal matched filter is Phi(Z^-1) = Z^{-(L-1)} * tilde(M(Z^-1)),
// left unnormalized (divide by C afterwards if needed). Distributing the
// delay over the stages gives the cascade
//
//   U(K)^H * E(K-1) * U(K-1)^H * ... * E(0) * U(0)^H,
//   E(k) = diag(Z^{-(max D(k) - D(k)_m)}),
//
// so each input sample costs (K+1) constant M x M products plus one delay
// line per port per stage, independent of L.

#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pucodes/errors.hpp"
#include "pucodes/generator.hpp"
#include "pucodes/scalar.hpp"
#include "pucodes/zpoly.hpp"

namespace pucodes {

template <RingScalar T>
struct MatchedFilterSpec {
  // Factors in product (left to right) order:
  //   mixers[0] * diag(delays[0]) * mixers[1] * ... * diag(delays[K-1]) * mixers[K]
  // with mixers[i] = U(K-i)^H and delays[i] the complement of D(K-1-i).
  std::vector<ConstMatrix<T>> mixers;
  std::vector<DelayVector> delays;
  std::int64_t total_delay = 0;  // L - 1
  T constant;                    // C of the source generating matrix
  std::string source_hash;

  std::size_t set_size() const { return mixers.empty() ? 0 : mixers.front().size(); }
  std::size_t stages() const { return delays.size(); }
};

template <RingScalar T>
MatchedFilterSpec<T> build_matched_filter(const GeneratorSpec<T>& g, double tol = kDefaultTolerance) {
  const auto summary = validate(g, tol);
  const auto stage = stage_delays(g);
  MatchedFilterSpec<T> f;
  f.constant = summary.constant;
  f.source_hash = generator_hash(g);
  for (std::size_t i = 0; i < g.unitaries.size(); ++i) f.mixers.push_back(g.unitaries[g.stages() - i].hermitian());
  for (std::size_t i = 0; i < stage.size(); ++i) {
    const DelayVector& d = stage[stage.size() - 1 - i];
    const std::int64_t top = d.max();
    std::vector<std::int64_t> causal;
    causal.reserve(d.size());
    for (auto v : d.delays) causal.push_back(top - v);
    f.delays.emplace_back(std::move(causal));
    f.total_delay += top;
  }
  return f;
}

/// The cascade multiplied out into one polynomial matrix.
template <RingScalar T>
PolyMatrix<T> expand_filter(const MatchedFilterSpec<T>& f) {
  const T one = one_like(f.constant);
  PolyMatrix<T> out = PolyMatrix<T>::from_constant(f.mixers.front());
  for (std::size_t i = 0; i < f.delays.size(); ++i) {
    out = out * delay_matrix(f.delays[i], one);
    out = out * PolyMatrix<T>::from_constant(f.mixers[i + 1]);
  }
  return out;
}

/// The cascade read as a generator spec with explicit delays. Its own
/// matched filter expands back to the original generating matrix.
template <RingScalar T>
GeneratorSpec<T> filter_as_generator(const MatchedFilterSpec<T>& f) {
  GeneratorSpec<T> g;
  g.unitaries = f.mixers;
  g.delays = ExplicitDelays{f.delays};
  return g;
}

/// Sample-by-sample evaluation of a matched filter. One instance per
/// stream; it may be moved between threads but not shared.
template <RingScalar T>
class StreamingCorrelator {
 public:
  explicit StreamingCorrelator(MatchedFilterSpec<T> f) : spec_(std::move(f)), zero_(zero_like(spec_.constant)) {
    const std::size_t m = spec_.set_size();
    // signal order is the reverse of product order
    for (std::size_t i = spec_.delays.size(); i-- > 0;) {
      std::vector<DelayLine> ports;
      for (std::size_t p = 0; p < m; ++p) {
        ports.push_back(DelayLine{std::vector<T>(static_cast<std::size_t>(spec_.delays[i][p]), zero_), 0});
      }
      lines_.push_back(std::move(ports));
    }
  }

  std::size_t set_size() const noexcept { return spec_.set_size(); }
  const MatchedFilterSpec<T>& spec() const noexcept { return spec_; }

  /// One input vector in, one output vector out.
  std::vector<T> push(std::span<const T> input) {
    const std::size_t m = set_size();
    if (input.size() != m) throw Error(ErrorCode::size_mismatch, "input vector size");
    std::vector<T> v(input.begin(), input.end());
    const std::size_t k_count = spec_.mixers.size() - 1;
    v = mix(spec_.mixers[k_count], v);
    for (std::size_t s = 0; s < lines_.size(); ++s) {
      for (std::size_t p = 0; p < m; ++p) v[p] = lines_[s][p].step(std::move(v[p]));
      v = mix(spec_.mixers[k_count - 1 - s], v);
    }
    ++samples_;
    return v;
  }

  /// A sample on input `port`, zeros elsewhere.
  std::vector<T> push_port(std::size_t port, const T& sample) {
    if (port >= set_size()) throw Error(ErrorCode::out_of_range, "port " + std::to_string(port));
    std::vector<T> in(set_size(), zero_);
    in[port] = sample;
    return push(in);
  }

  /// Drains the delay lines: total_delay further zero-input steps.
  std::vector<std::vector<T>> flush() {
    std::vector<std::vector<T>> out;
    const std::vector<T> silence(set_size(), zero_);
    for (std::int64_t t = 0; t < spec_.total_delay; ++t) out.push_back(push(silence));
    return out;
  }

  std::uint64_t samples() const noexcept { return samples_; }
  /// Scalar multiplications performed by the mixing stages so far.
  std::uint64_t multiplications() const noexcept { return multiplications_; }

 private:
  struct DelayLine {
    std::vector<T> buffer;
    std::size_t head = 0;

    T step(T in) {
      if (buffer.empty()) return in;
      T out = std::move(buffer[head]);
      buffer[head] = std::move(in);
      head = (head + 1) % buffer.size();
      return out;
    }
  };

  std::vector<T> mix(const ConstMatrix<T>& u, const std::vector<T>& v) {
    const std::size_t m = v.size();
    std::vector<T> out(m, zero_);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) out[r] += u(r, c) * v[c];
    multiplications_ += m * m;
    return out;
  }

  MatchedFilterSpec<T> spec_;
  T zero_;
  std::vector<std::vector<DelayLine>> lines_;  // [stage in signal order][port]
  std::uint64_t samples_ = 0;
  std::uint64_t multiplications_ = 0;
};

/// Feeds `samples` into input `port` and flushes. Returns the M output
/// sequences, each samples.size() + L - 1 long; output m at time t equals
/// C_{x_m, s}(t - (L-1)) where x_m is sequence m of set `port`.
template <RingScalar T>
std::vector<std::vector<T>> correlate_stream(const MatchedFilterSpec<T>& f, std::size_t port,
                                             std::span<const T> samples) {
  StreamingCorrelator<T> stream(f);
  if (port >= stream.set_size()) throw Error(ErrorCode::out_of_range, "port " + std::to_string(port));
  std::vector<std::vector<T>> out(stream.set_size());
  auto append = [&](std::vector<T> y) {
    for (std::size_t m = 0; m < y.size(); ++m) out[m].push_back(std::move(y[m]));
  };
  for (const auto& s : samples) append(stream.push_port(port, s));
  for (auto& y : stream.flush()) append(std::move(y));
  return out;
}

/// Simultaneous input on every port: inputs[p] is the stream for port p.
template <RingScalar T>
std::vector<std::vector<T>> correlate_stream_multi(const MatchedFilterSpec<T>& f,
                                                   const std::vector<std::vector<T>>& inputs) {
  StreamingCorrelator<T> stream(f);
  const std::size_t m = stream.set_size();
  if (inputs.size() != m) throw Error(ErrorCode::size_mismatch, "one input stream per port");
  const std::size_t len = inputs.front().size();
  for (const auto& s : inputs)
    if (s.size() != len) throw Error(ErrorCode::shape_mismatch, "input streams differ in length");
  std::vector<std::vector<T>> out(m);
  auto append = [&](std::vector<T> y) {
    for (std::size_t p = 0; p < y.size(); ++p) out[p].push_back(std::move(y[p]));
  };
  std::vector<T> frame(m, zero_like(f.constant));
  for (std::size_t t = 0; t < len; ++t) {
    for (std::size_t p = 0; p < m; ++p) frame[p] = inputs[p][t];
    append(stream.push(frame));
  }
  for (auto& y : stream.flush()) append(std::move(y));
  return out;
}

/// Divides correlator outputs by C in the float domain.
template <RingScalar T>
std::vector<std::vector<ComplexFloat>> normalize_outputs(const std::vector<std::vector<T>>& outputs,
                                                         const T& constant) {
  const std::complex<double> c = embed_complex(constant).value();
  std::vector<std::vector<ComplexFloat>> out;
  for (const auto& row : outputs) {
    std::vector<ComplexFloat> scaled;
    scaled.reserve(row.size());
    for (const auto& v : row) scaled.emplace_back(embed_complex(v).value() / c);
    out.push_back(std::move(scaled));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Operation counts

struct OpCount {
  std::size_t set_size = 0;
  std::size_t stages = 0;
  std::int64_t length = 0;
  /// Multiplications per input sample: (K+1) M^2 for the cascade,
  /// M L for M direct L-tap correlators.
  std::uint64_t cascade_mults_per_sample = 0;
  std::uint64_t direct_mults_per_sample = 0;
  /// Per output with a single-port input: each of the K delay stages
  /// combines M branches, M-1 additions per output; the first mixing stage
  /// only scales the one live input. A direct correlator needs L
  /// multiply-accumulates per output.
  std::uint64_t cascade_ops_per_output = 0;
  std::uint64_t direct_ops_per_output = 0;

  double sample_ratio() const {
    return static_cast<double>(direct_mults_per_sample) / static_cast<double>(cascade_mults_per_sample);
  }
  double output_ratio() const {
    return cascade_ops_per_output == 0
               ? 0.0
               : static_cast<double>(direct_ops_per_output) / static_cast<double>(cascade_ops_per_output);
  }
};

inline OpCount op_count(std::size_t m, std::size_t k, std::int64_t length) {
  OpCount c;
  c.set_size = m;
  c.stages = k;
  c.length = length;
  const auto mm = static_cast<std::uint64_t>(m);
  c.cascade_mults_per_sample = (k + 1) * mm * mm;
  c.direct_mults_per_sample = mm * static_cast<std::uint64_t>(length);
  c.cascade_ops_per_output = k * (mm - 1);
  c.direct_ops_per_output = static_cast<std::uint64_t>(length);
  return c;
}

template <RingScalar T>
OpCount op_count(const MatchedFilterSpec<T>& f) {
  return op_count(f.set_size(), f.stages(), f.total_delay + 1);
}

}  // namespace pucodes
