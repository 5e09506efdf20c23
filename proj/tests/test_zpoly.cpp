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

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "pucodes/pucodes.hpp"
#include "random_specs.hpp"

using namespace pucodes;
using G = GaussInt;
using P = ZPoly<GaussInt>;

namespace {

std::mt19937_64 make_rng() { return std::mt19937_64(Catch::getSeed()); }

P poly(std::int64_t low, std::vector<std::int64_t> c) {
  std::vector<G> v;
  for (auto x : c) v.emplace_back(x);
  return P(low, v);
}

P random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coef(-3, 3), low(-3, 3), len(0, 4);
  std::vector<G> c(static_cast<std::size_t>(len(rng)));
  for (auto& x : c) x = G(coef(rng), coef(rng));
  return P(low(rng), c);
}

PolyMatrix<G> random_matrix(std::mt19937_64& rng, std::size_t m) {
  PolyMatrix<G> a(m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) a(r, c) = random_poly(rng);
  return a;
}

// Dense complex coefficients of Z^-k for k in [lo, hi]
std::vector<std::complex<double>> dense(const P& p, std::int64_t lo, std::int64_t hi) {
  std::vector<std::complex<double>> out;
  for (std::int64_t k = lo; k <= hi; ++k) out.push_back(oracle::value(p.coefficient(k, G())));
  return out;
}

PolyMatrix<Cyclotomic> dft3_generating_matrix() {
  GeneratorSpec<Cyclotomic> g;
  g.unitaries.assign(3, dft_matrix(3).matrix);
  g.delays = StandardDelays{{0, 1}};
  return build_generating_matrix(g);
}

}  // namespace

TEST_CASE("Polynomial products of small hand examples", "[zpoly]") {
  // (1 + Z^-1)(1 - Z^-1) = 1 - Z^-2
  CHECK(poly(0, {1, 1}) * poly(0, {1, -1}) == poly(0, {1, 0, -1}));
  // (1 + Z)(1 - Z^-1) = Z - Z^-1
  const P lhs = poly(-1, {1, 1}) * poly(0, {1, -1});
  CHECK(lhs == poly(-1, {1, 0, -1}));
  CHECK(lhs.low() == -1);
  CHECK(lhs.high() == 1);
  CHECK(*lhs.find(0) == G(0));
  CHECK(lhs.find(2) == nullptr);
  const P a = poly(2, {3, 0, 5});
  CHECK(a * P::constant(G(1)) == a);
  CHECK((a - a).is_zero());
  CHECK(poly(0, {0, 0, 7, 0}) == P::monomial(G(7), 2));
}

TEST_CASE("Polynomial products match a complex convolution oracle", "[zpoly]") {
  auto rng = make_rng();
  for (int trial = 0; trial < 300; ++trial) {
    const P a = random_poly(rng), b = random_poly(rng);
    const P prod = poly_mul(a, b);
    if (a.is_zero() || b.is_zero()) {
      CHECK(prod.is_zero());
      continue;
    }
    const auto expected = oracle::poly_mul(dense(a, a.low(), a.high()), dense(b, b.low(), b.high()));
    const auto got = dense(prod, a.low() + b.low(), a.high() + b.high());
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(oracle::near(got[i], expected[i]));
    // exponent bounds
    CHECK(prod.high() <= a.high() + b.high());
    CHECK(prod.low() >= a.low() + b.low());
  }
}

TEST_CASE("Paraconjugation reverses exponents and conjugates", "[zpoly][tilde]") {
  const P x(0, {G(1), G(0, 1), G(2, -1)});
  const P t = x.paraconjugate();
  CHECK(t.low() == -2);
  CHECK(*t.find(-2) == G(2, 1));
  CHECK(*t.find(-1) == G(0, -1));
  CHECK(*t.find(0) == G(1));
  CHECK(t.paraconjugate() == x);

  PolyMatrix<G> z(1);
  z(0, 0) = P::monomial(G(1), 1);
  CHECK(tilde(z)(0, 0) == P::monomial(G(1), -1));
}

TEST_CASE("tilde of the constant 3x3 DFT is its Hermitian transpose", "[zpoly][tilde]") {
  const auto f = dft_matrix(3).matrix;
  const auto t = tilde(PolyMatrix<Cyclotomic>::from_constant(f));
  CHECK(t == PolyMatrix<Cyclotomic>::from_constant(f.hermitian()));
  // entry (1,2): conj(w^2) = w
  CHECK(*t(1, 2).find(0) == Cyclotomic::root_of_unity(3, 1));
}

TEST_CASE("tilde is an involution and an anti-homomorphism", "[zpoly][tilde][property]") {
  auto rng = make_rng();
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + trial % 3;
    const auto a = random_matrix(rng, m), b = random_matrix(rng, m);
    CHECK(tilde(tilde(a)) == a);
    CHECK(tilde(a * b) == tilde(b) * tilde(a));
  }
}

TEST_CASE("Polynomial matrix products are associative and have an identity", "[zpoly][property]") {
  auto rng = make_rng();
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 1 + trial % 3;
    const auto a = random_matrix(rng, m), b = random_matrix(rng, m), c = random_matrix(rng, m);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * PolyMatrix<G>::identity(m, G(1)) == a);
    CHECK(matrix_mul(PolyMatrix<G>::identity(m, G(1)), a) == a);
  }
  CHECK_THROWS_AS(random_matrix(rng, 2) * random_matrix(rng, 3), Error);
}

TEST_CASE("Delay matrices", "[zpoly][delay]") {
  const auto d1 = delay_matrix(regular_delays(3, 1), G(1));
  CHECK(d1(0, 0) == P::constant(G(1)));
  CHECK(d1(1, 1) == P::monomial(G(1), 1));
  CHECK(d1(2, 2) == P::monomial(G(1), 2));
  CHECK(d1(0, 1).is_zero());
  CHECK(regular_delays(3, 3) == DelayVector{0, 3, 6});
  CHECK(regular_delays(2, 0) == DelayVector{0, 0});
  CHECK(delay_matrix(DelayVector{0, 0, 0}, G(1)) == PolyMatrix<G>::identity(3, G(1)));
  // diag(1, Z^-1) diag(1, Z^-3) = diag(1, Z^-4)
  CHECK(delay_matrix(DelayVector{0, 1}, G(1)) * delay_matrix(DelayVector{0, 3}, G(1)) ==
        delay_matrix(DelayVector{0, 4}, G(1)));
  CHECK_THROWS_AS(DelayVector({0, -1}), Error);
  CHECK_THROWS_AS(regular_delays(2, -1), Error);
}

TEST_CASE("Every delay matrix is paraunitary with C = 1", "[zpoly][delay][property]") {
  auto rng = make_rng();
  std::uniform_int_distribution<std::int64_t> d(0, 50);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::int64_t> v(1 + static_cast<std::size_t>(trial % 5));
    for (auto& x : v) x = d(rng);
    const auto check = is_paraunitary(delay_matrix(DelayVector(v), G(1)));
    CHECK(check.paraunitary);
    CHECK(check.constant == G(1));
    const auto cyc = is_paraunitary(delay_matrix(DelayVector(v), Cyclotomic::integer(5, 1)));
    CHECK(cyc.constant == Cyclotomic::integer(5, 1));
  }
}

TEST_CASE("Golay generating matrix by hand", "[zpoly]") {
  const ConstMatrix<G> f2{{G(1), G(1)}, {G(1), G(-1)}};
  const auto m = PolyMatrix<G>::from_constant(f2) * delay_matrix(DelayVector{0, 1}, G(1)) *
                 PolyMatrix<G>::from_constant(f2);
  CHECK(m(0, 0) == poly(0, {1, 1}));
  CHECK(m(0, 1) == poly(0, {1, -1}));
  CHECK(m(1, 0) == poly(0, {1, -1}));
  CHECK(m(1, 1) == poly(0, {1, 1}));
  const auto check = is_paraunitary(m);
  CHECK(check.paraunitary);
  CHECK(check.constant == G(4));
}

TEST_CASE("Paraunitarity checks", "[zpoly][paraunitary]") {
  const auto dft = is_paraunitary(PolyMatrix<Cyclotomic>::from_constant(dft_matrix(3).matrix));
  CHECK(dft.paraunitary);
  CHECK(dft.constant == Cyclotomic::integer(3, 3));

  const auto full = is_paraunitary(dft3_generating_matrix());
  CHECK(full.paraunitary);
  CHECK(full.constant == Cyclotomic::integer(3, 27));

  const ConstMatrix<G> ones{{G(1), G(1)}, {G(1), G(1)}};
  CHECK_FALSE(is_paraunitary(PolyMatrix<G>::from_constant(ones)).paraunitary);

  // clean off-diagonal, diagonal depending on Z
  PolyMatrix<G> a = PolyMatrix<G>::identity(2, G(1));
  a(0, 0) = poly(0, {1, 1});
  try {
    (void)is_paraunitary(a);
    FAIL("expected non_constant_diagonal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::non_constant_diagonal);
  }
  // constant but unequal diagonal
  a(0, 0) = P::constant(G(2));
  CHECK_THROWS_AS(is_paraunitary(a), Error);
}

TEST_CASE("Float paraunitarity uses the tolerance", "[zpoly][paraunitary]") {
  testgen::Rng rng(Catch::getSeed());
  const auto u = testgen::random_float_unitary(rng, 4);
  auto m = PolyMatrix<ComplexFloat>::from_constant(u) * delay_matrix(DelayVector{0, 1, 2, 3}, ComplexFloat(1.0)) *
           PolyMatrix<ComplexFloat>::from_constant(u);
  const auto check = is_paraunitary(m, 1e-9);
  CHECK(check.paraunitary);
  CHECK(std::abs(check.constant->value() - std::complex<double>(1.0)) < 1e-9);
}

TEST_CASE("Constant unitary detection", "[zpoly][unitary]") {
  CHECK(unitary_constant(hadamard_sylvester(2).matrix) == G(4));
  const ConstMatrix<G> skew{{G(1), G(1)}, {G(1), G(0)}};
  CHECK_FALSE(unitary_constant(skew).has_value());
  const ConstMatrix<G> negative{{G(0, 1)}};
  CHECK(unitary_constant(negative) == G(1));
}
