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
#include <algorithm>
#include <vector>

#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "pucodes/pucodes.hpp"
#include "random_specs.hpp"

using namespace pucodes;
using G = GaussInt;

namespace {

GeneratorSpec<Cyclotomic> dft3_spec(std::vector<int> pi = {0, 1}) {
  GeneratorSpec<Cyclotomic> g;
  g.unitaries.assign(pi.size() + 1, dft_matrix(3).matrix);
  g.delays = StandardDelays{std::move(pi)};
  return g;
}

GeneratorSpec<G> golay_spec(std::size_t k) {
  GeneratorSpec<G> g;
  g.unitaries.assign(k + 1, hadamard_sylvester(1).matrix);
  g.delays = StandardDelays{identity_permutation(k)};
  return g;
}

std::vector<std::vector<std::int64_t>> raw(const std::vector<DelayVector>& ds) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& d : ds) out.push_back(d.delays);
  return out;
}

template <class T>
void check_against_oracle(const GeneratorSpec<T>& g) {
  const auto mat = build_generating_matrix(g);
  const auto expected = oracle::generating_matrix(g.unitaries, raw(stage_delays(g)));
  const std::int64_t len = sequence_length(g);
  for (std::size_t r = 0; r < g.set_size(); ++r)
    for (std::size_t s = 0; s < g.set_size(); ++s)
      for (std::int64_t n = 0; n < len; ++n) {
        const auto got = oracle::value(mat(r, s).coefficient(n, zero_like(g.sample())));
        REQUIRE(oracle::near(got, oracle::coefficient(expected[r][s], static_cast<std::size_t>(n))));
      }
}

template <class T>
bool same_set(const SequenceSet<T>& a, const SequenceSet<T>& b) {
  if constexpr (std::is_same_v<T, ComplexFloat>) {
    if (a.size() != b.size() || a.length() != b.length()) return false;
    for (std::size_t s = 0; s < a.size(); ++s)
      for (std::size_t n = 0; n < a.length(); ++n)
        if (!oracle::near(a.sequences[s][n].value(), b.sequences[s][n].value())) return false;
    return true;
  } else {
    return a == b;
  }
}

template <class T>
void check_engines_agree(const GeneratorSpec<T>& g) {
  for (std::size_t r = 0; r < g.set_size(); ++r) {
    for (auto o : {Orientation::row, Orientation::column}) {
      const auto direct = generate_set(g, r, o);
      REQUIRE(same_set(recursive_generate(g, r, o), direct));
      if (g.is_standard()) REQUIRE(same_set(rmg_set(g, r, o), direct));
    }
  }
}

template <class T>
void random_engine_round(testgen::Rng& rng, const T& sample, int cases) {
  for (int i = 0; i < cases; ++i) {
    const std::size_t m = 2 + testgen::pick(rng, 3);
    if (!testgen::supports(m, sample)) continue;
    const std::size_t k = testgen::pick(rng, std::min<std::size_t>(testgen::max_stages(m, 256), 4) + 1);
    const auto g = testgen::random_standard_spec(rng, m, k, sample, true);
    check_against_oracle(g);
    check_engines_agree(g);
  }
}

}  // namespace

TEST_CASE("Radix digits", "[generator][digits]") {
  CHECK(digits(5, 3, 2).digits == std::vector<int>{2, 1});
  CHECK(digits(7, 2, 3).digits == std::vector<int>{1, 1, 1});
  CHECK(digits(0, 4, 0).digits.empty());
  CHECK(digits(0, 2, 3).digits == std::vector<int>{0, 0, 0});
  CHECK_THROWS_AS(digits(9, 3, 2), Error);
  CHECK_THROWS_AS(digits(-1, 3, 2), Error);
  for (std::int64_t n = 0; n < 81; ++n) {
    const auto d = digits(n, 3, 4);
    std::int64_t back = 0;
    for (std::size_t i = 4; i-- > 0;) back = back * 3 + d.digits[i];
    CHECK(back == n);
  }
}

TEST_CASE("Standard delay plans", "[generator][delays]") {
  const std::vector<int> id{0, 1};
  const auto d = standard_delays(3, 2, id);
  CHECK(d[0] == DelayVector{0, 1, 2});
  CHECK(d[1] == DelayVector{0, 3, 6});
  const std::vector<int> swapped{1, 0};
  CHECK(standard_delays(3, 2, swapped)[0] == DelayVector{0, 3, 6});
  CHECK(sequence_length(dft3_spec()) == 9);
  CHECK(sequence_length(golay_spec(5)) == 32);
  CHECK(raw(stage_delays(golay_spec(3))) == oracle::standard_delays(2, {0, 1, 2}));

  const std::vector<int> bad{0, 0};
  try {
    (void)standard_delays(3, 2, bad);
    FAIL("expected invalid_permutation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_permutation);
  }
  const std::vector<int> short_pi{0};
  CHECK_THROWS_AS(standard_delays(3, 2, short_pi), Error);
}

TEST_CASE("Standard delays reach every sample exactly once", "[generator][delays][property]") {
  testgen::Rng rng(Catch::getSeed());
  for (std::size_t m = 2; m <= 5; ++m) {
    for (std::size_t k = 0; k <= testgen::max_stages(m, 1024); ++k) {
      const auto pi = testgen::random_permutation(rng, k);
      const auto d = standard_delays(m, k, pi);
      const std::int64_t len = checked_pow(static_cast<std::int64_t>(m), k);
      std::vector<int> hits(static_cast<std::size_t>(len), 0);
      // every tuple (a_0..a_{K-1}) of per-stage branch choices
      for (std::int64_t t = 0; t < len; ++t) {
        const auto a = digits(t, static_cast<std::int64_t>(m), k);
        std::int64_t total = 0;
        for (std::size_t s = 0; s < k; ++s) total += d[s][static_cast<std::size_t>(a.digits[s])];
        REQUIRE(total < len);
        ++hits[static_cast<std::size_t>(total)];
      }
      for (int h : hits) REQUIRE(h == 1);
    }
  }
}

TEST_CASE("Golay pair from the 2x2 Hadamard kernel", "[generator][golay]") {
  const auto g1 = golay_spec(1);
  const auto set = generate_set(g1, 0);
  CHECK(set.sequences == std::vector<std::vector<G>>{{G(1), G(1)}, {G(1), G(-1)}});
  const auto other = generate_set(g1, 1);
  CHECK(other.sequences == std::vector<std::vector<G>>{{G(1), G(-1)}, {G(1), G(1)}});

  const auto g5 = golay_spec(5);
  const auto s5 = generate_set(g5, 0);
  CHECK(s5.length() == 32);
  for (const auto& seq : s5.sequences)
    for (const auto& v : seq) CHECK(msq(v) == 1);
  const auto a = oracle::values(s5.sequences[0]), b = oracle::values(s5.sequences[1]);
  for (std::int64_t k = -31; k <= 31; ++k) {
    const auto sum = oracle::correlation(a, a, k) + oracle::correlation(b, b, k);
    CHECK(oracle::near(sum, k == 0 ? 64.0 : 0.0));
  }
}

TEST_CASE("3x3 DFT with K = 2 gives w^(r d0 + d0 d1 + d1 s)", "[generator][dft3]") {
  const auto g = dft3_spec();
  for (std::size_t r = 0; r < 3; ++r) {
    const auto set = generate_set(g, r);
    REQUIRE(set.length() == 9);
    for (int s = 0; s < 3; ++s)
      for (int n = 0; n < 9; ++n) {
        CHECK(set.sequences[static_cast<std::size_t>(s)][static_cast<std::size_t>(n)] ==
              Cyclotomic::root_of_unity(3, oracle::dft3_exponent(static_cast<int>(r), s, n)));
      }
  }
  const auto pu = is_paraunitary(build_generating_matrix(g));
  CHECK(pu.constant == Cyclotomic::integer(3, 27));
  CHECK(validate(g).constant == Cyclotomic::integer(3, 27));
}

TEST_CASE("K = 0 and zero delays", "[generator][edge]") {
  GeneratorSpec<Cyclotomic> g;
  g.unitaries = {dft_matrix(3).matrix};
  CHECK(sequence_length(g) == 1);
  const auto set = generate_set(g, 1);
  CHECK(set.length() == 1);
  CHECK(set.sequences[2][0] == Cyclotomic::root_of_unity(3, 2));
  CHECK(rmg_set(g, 1) == set);
  CHECK(recursive_generate(g, 1) == set);

  GeneratorSpec<G> z;
  z.unitaries.assign(3, hadamard_sylvester(1).matrix);
  z.delays = ExplicitDelays{{DelayVector{0, 0}, DelayVector{0, 0}}};
  CHECK(sequence_length(z) == 1);
  const auto mat = build_generating_matrix(z);
  const auto prod = hadamard_sylvester(1).matrix * hadamard_sylvester(1).matrix * hadamard_sylvester(1).matrix;
  CHECK(mat == PolyMatrix<G>::from_constant(prod));
  CHECK(validate(z).constant == G(8));
}

TEST_CASE("Set extraction", "[generator][extract]") {
  PolyMatrix<G> a(2);
  a(0, 0) = ZPoly<G>(0, {G(1), G(2)});
  a(0, 1) = ZPoly<G>::monomial(G(0, 1), 2);
  a(1, 0) = ZPoly<G>::constant(G(5));
  const auto row = extract_set(a, 0);
  CHECK(row.sequences == std::vector<std::vector<G>>{{G(1), G(2), G(0)}, {G(0), G(0), G(0, 1)}});
  const auto col = extract_set(a, 0, Orientation::column);
  CHECK(col.sequences == std::vector<std::vector<G>>{{G(1), G(2), G(0)}, {G(5), G(0), G(0)}});
  CHECK(extract_set(a, 1, Orientation::row, 5).length() == 5);
  CHECK_THROWS_AS(extract_set(a, 2), Error);

  const auto id = extract_set(PolyMatrix<G>::identity(3, G(1)), 1);
  CHECK(id.sequences == std::vector<std::vector<G>>{{G(0)}, {G(1)}, {G(0)}});

  PolyMatrix<G> anti = PolyMatrix<G>::identity(2, G(1));
  anti(1, 1) = ZPoly<G>::monomial(G(1), -1);
  try {
    (void)extract_set(anti, 0);
    FAIL("expected anticausal_input");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::anticausal_input);
  }
}

TEST_CASE("Element-wise evaluation", "[generator][rmg]") {
  const auto g = dft3_spec();
  // n = 5: d0 = 2, d1 = 1, U0[0,2] U1[2,1] U2[1,0] = w^(0 + 2 + 0)
  CHECK(rmg_element(g, 0, 0, 5) == Cyclotomic::root_of_unity(3, 2));
  CHECK(rmg_element(g, 2, 1, 5) == Cyclotomic::root_of_unity(3, (4 + 2 + 1) % 3));
  CHECK_THROWS_AS(rmg_element(g, 0, 0, 9), Error);
  CHECK_THROWS_AS(rmg_element(g, 3, 0, 0), Error);

  const auto mat = build_generating_matrix(g);
  for (std::int64_t n = 0; n < 9; ++n) {
    const auto coeff = rmg_matrix(g, n);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t s = 0; s < 3; ++s) CHECK(coeff(r, s) == mat(r, s).coefficient(n, Cyclotomic(3)));
  }

  GeneratorSpec<G> e;
  e.unitaries.assign(2, hadamard_sylvester(1).matrix);
  e.delays = ExplicitDelays{{DelayVector{0, 1}}};
  try {
    (void)rmg_set(e, 0);
    FAIL("expected not_standard");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::not_standard);
  }
}

TEST_CASE("Product of sums equals the digit-indexed sum of products", "[generator][expansion]") {
  // prod_k sum_m F_k(m) == sum_n prod_k F_k(d_k(n)), factors kept in order
  testgen::Rng rng(Catch::getSeed());
  std::uniform_int_distribution<std::int64_t> c(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + testgen::pick(rng, 3);
    const std::size_t k = 1 + testgen::pick(rng, 3);
    const std::size_t dim = 1 + testgen::pick(rng, 3);
    std::vector<std::vector<ConstMatrix<G>>> f(k);
    for (auto& stage : f)
      for (std::size_t i = 0; i < m; ++i) {
        ConstMatrix<G> x(dim, G(0));
        for (std::size_t r = 0; r < dim; ++r)
          for (std::size_t s = 0; s < dim; ++s) x(r, s) = G(c(rng), c(rng));
        stage.push_back(x);
      }
    ConstMatrix<G> lhs(dim, G(0));
    for (std::size_t i = 0; i < dim; ++i) lhs(i, i) = G(1);
    for (const auto& stage : f) {
      ConstMatrix<G> sum(dim, G(0));
      for (const auto& x : stage)
        for (std::size_t r = 0; r < dim; ++r)
          for (std::size_t s = 0; s < dim; ++s) sum(r, s) += x(r, s);
      lhs = lhs * sum;
    }
    ConstMatrix<G> rhs(dim, G(0));
    const std::int64_t count = checked_pow(static_cast<std::int64_t>(m), k);
    for (std::int64_t n = 0; n < count; ++n) {
      const auto d = digits(n, static_cast<std::int64_t>(m), k);
      ConstMatrix<G> term = f[0][static_cast<std::size_t>(d.digits[0])];
      for (std::size_t s = 1; s < k; ++s) term = term * f[s][static_cast<std::size_t>(d.digits[s])];
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t s = 0; s < dim; ++s) rhs(r, s) += term(r, s);
    }
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("All construction engines agree with an independent product", "[generator][property]") {
  testgen::Rng rng(Catch::getSeed());
  random_engine_round(rng, testgen::gauss_sample(), 25);
  random_engine_round(rng, testgen::eisenstein_sample(), 25);
  random_engine_round(rng, testgen::cyclo_sample(3), 15);
  random_engine_round(rng, testgen::cyclo_sample(4), 10);
  random_engine_round(rng, testgen::cyclo_sample(12), 10);
  random_engine_round(rng, testgen::float_sample(), 20);
}

TEST_CASE("Explicit delay plans match the independent product", "[generator][property]") {
  testgen::Rng rng(Catch::getSeed());
  for (int i = 0; i < 30; ++i) {
    const std::size_t m = 2 + testgen::pick(rng, 3);
    const std::size_t k = testgen::pick(rng, 4);
    const auto g = testgen::random_explicit_spec(rng, m, k, testgen::cyclo_sample(12), 7);
    check_against_oracle(g);
    check_engines_agree(g);
    CHECK(is_paraunitary(build_generating_matrix(g)).constant == validate(g).constant);
  }
}

TEST_CASE("Transposition and unitary closure", "[generator][property]") {
  testgen::Rng rng(Catch::getSeed());
  for (int i = 0; i < 30; ++i) {
    const std::size_t m = 2 + testgen::pick(rng, 2);
    const std::size_t k = testgen::pick(rng, 4);
    const auto g = testgen::random_standard_spec(rng, m, k, testgen::gauss_sample());
    // reversed chain of transposed factors
    GeneratorSpec<G> t;
    for (std::size_t j = g.unitaries.size(); j-- > 0;) t.unitaries.push_back(g.unitaries[j].transpose());
    auto pi = std::get<StandardDelays>(g.delays).permutation;
    std::reverse(pi.begin(), pi.end());
    t.delays = StandardDelays{pi};
    CHECK(build_generating_matrix(t) == build_generating_matrix(g).transpose());
    for (std::size_t r = 0; r < m; ++r) CHECK(generate_set(t, r) == generate_set(g, r, Orientation::column));

    const auto a = g.unitaries.front(), b = g.unitaries.back();
    CHECK(unitary_constant(a * b) == *unitary_constant(a) * *unitary_constant(b));
  }
}

TEST_CASE("Spec validation errors", "[generator][errors]") {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::invalid_spec;
  };
  GeneratorSpec<G> empty;
  CHECK(code_of([&] { validate(empty); }) == ErrorCode::invalid_spec);

  auto g = golay_spec(2);
  g.unitaries[1] = ConstMatrix<G>{{G(1), G(1)}, {G(1), G(0)}};
  CHECK(code_of([&] { validate(g); }) == ErrorCode::invalid_spec);

  g = golay_spec(2);
  g.unitaries[2] = hadamard_sylvester(2).matrix;
  CHECK(code_of([&] { validate(g); }) == ErrorCode::size_mismatch);

  g = golay_spec(2);
  g.delays = StandardDelays{{1, 1}};
  CHECK(code_of([&] { validate(g); }) == ErrorCode::invalid_permutation);

  g = golay_spec(2);
  g.delays = ExplicitDelays{{DelayVector{0, 1}}};
  CHECK(code_of([&] { validate(g); }) == ErrorCode::invalid_spec);
  g.delays = ExplicitDelays{{DelayVector{0, 1}, DelayVector{0, 1, 2}}};
  CHECK(code_of([&] { validate(g); }) == ErrorCode::size_mismatch);

  auto c = dft3_spec();
  c.unitaries[1](0, 0) = Cyclotomic::integer(6, 1);
  CHECK(code_of([&] { validate(c); }) == ErrorCode::kind_mismatch);
  CHECK(code_of([&] { generate_set(dft3_spec(), 3); }) == ErrorCode::out_of_range);
  CHECK(code_of([&] { recursive_generate(dft3_spec(), 3); }) == ErrorCode::out_of_range);
}

TEST_CASE("Spec hash tracks content", "[generator]") {
  CHECK(generator_hash(dft3_spec()) == generator_hash(dft3_spec()));
  CHECK(generator_hash(dft3_spec()) != generator_hash(dft3_spec({1, 0})));
  CHECK(generator_hash(dft3_spec()).size() == 16);
  CHECK(generate_set(dft3_spec(), 0).generator_hash == generator_hash(dft3_spec()));
}
