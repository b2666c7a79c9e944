// Copyright 2026 The Retrodictor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "retro/random.hpp"

using namespace retro;

namespace {

Element qubit(std::initializer_list<Complex> rowmajor) {
  Matrix m(2, 2);
  auto it = rowmajor.begin();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = *it++;
  return Element(Algebra::matrix(2), {m});
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("algebra shape") {
    const Algebra a({2, 1, 3});
    CHECK(a.num_blocks() == 3);
    CHECK(a.total_dim() == 14);
    CHECK(a.matrix_dim() == 6);
    CHECK(a.offset(2) == 5);
    CHECK_FALSE(a.is_commutative());
    CHECK(Algebra::classical(3).is_commutative());
    CHECK_THROWS_AS(Algebra(std::vector<int>{}), InvalidArgument);
    CHECK_THROWS_AS(Algebra(std::vector<int>{2, 0}), InvalidArgument);
  }

  TEST_CASE("tensor algebra is x-major") {
    const Algebra t = tensor(Algebra({2, 1}), Algebra({1, 3}));
    CHECK(t.block_dims() == std::vector<int>{2, 6, 1, 3});
  }

  TEST_CASE("trace examples") {
    CHECK(std::abs(trace(Element::identity(Algebra::matrix(2))) - 2.0) < 1e-15);
    const double half[] = {0.5, 0.5};
    CHECK(std::abs(trace(FaithfulState::diagonal_matrix(half).element()) - 1.0) < 1e-15);
    const double beta[] = {0.2, 0.8};
    CHECK(std::abs(trace(FaithfulState::classical(beta).element()) - 1.0) < 1e-15);
  }

  TEST_CASE("hs inner product examples") {
    const Element id = Element::identity(Algebra::matrix(2));
    CHECK(std::abs(hs_inner(id, id) - 2.0) < 1e-15);
    CHECK(std::abs(hs_inner(pauli_x(), pauli_x()) - 2.0) < 1e-15);
    CHECK(std::abs(hs_inner(id, pauli_x())) < 1e-15);
    CHECK_THROWS_AS(hs_inner(id, Element::identity(Algebra::matrix(3))), AlgebraMismatch);
  }

  TEST_CASE("kms inner product") {
    const FaithfulState mixed = FaithfulState::maximally_mixed(Algebra::matrix(2));
    const Element id = Element::identity(Algebra::matrix(2));
    CHECK(std::abs(kms_inner(mixed, id, id) - 4.0) < 1e-12);

    const FaithfulState a = random_faithful_state(Algebra({2, 1}), 1e-2, 4);
    CHECK(std::abs(kms_inner(a, a.element(), a.element()) - 1.0) < 1e-12);

    const double th = 0.3;
    const double p[] = {th, 1 - th};
    const FaithfulState c = FaithfulState::classical(p);
    const Element d0 = Element::matrix_unit(c.algebra(), 0, 0, 0);
    CHECK(std::abs(kms_inner(c, d0, d0) - 1.0 / th) < 1e-12);
  }

  TEST_CASE("kms form equals hs form of quarter powers") {
    for (std::uint64_t s = 0; s < 10; ++s) {
      const Algebra alg({2, 1});
      const FaithfulState a = random_faithful_state(alg, 1e-2, s);
      const Element x = random_unitary(alg, 100 + s) + Element::identity(alg) * Complex(0.3, 0.1);
      const Element y = random_unitary(alg, 200 + s);
      const Element q = a.power(-0.25);
      CHECK(std::abs(kms_inner(a, x, y) - hs_inner(q * x * q, q * y * q)) < 1e-10);
    }
  }

  TEST_CASE("element power examples") {
    const FaithfulState a = random_faithful_state(Algebra::matrix(3), 1e-2, 1);
    CHECK(approx_equal(a.power(0.0), Element::identity(a.algebra()), 1e-14));
    const double quarter[] = {0.25, 0.25, 0.25, 0.25};
    CHECK(approx_equal(FaithfulState::diagonal_matrix(quarter).power(0.5),
                       Element::identity(Algebra::matrix(4)) * Complex(0.5), 1e-14));
    const double th = 0.3;
    const double p[] = {th, 1 - th};
    const double t = 0.7;
    const Element u = FaithfulState::diagonal_matrix(p).power(Complex(0.0, t));
    CHECK(std::abs(u.block(0)(0, 0) - std::exp(Complex(0.0, t * std::log(th)))) < 1e-14);
    CHECK(std::abs(u.block(0)(1, 1) - std::exp(Complex(0.0, t * std::log(1 - th)))) < 1e-14);
    CHECK(is_unitary(a.power(Complex(0.0, 1.3))));
  }

  TEST_CASE("power group law and oracle agreement") {
    std::mt19937_64 g(7);
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Algebra alg(s % 2 ? std::vector<int>{3} : std::vector<int>{2, 1, 2});
      const FaithfulState a = random_faithful_state(alg, 1e-3, s);
      const Complex z1(0.3, -1.1), z2(-0.8, 0.4);
      CHECK(approx_equal(a.power(z1) * a.power(z2), a.power(z1 + z2), 1e-10));
      for (int x = 0; x < alg.num_blocks(); ++x)
        CHECK((a.power(z1).block(x) - oracle::herm_power(a.element().block(x), z1)).norm() < 1e-10);
    }
  }

  TEST_CASE("commutative power is entrywise") {
    const double p[] = {0.1, 0.6, 0.3};
    const FaithfulState c = FaithfulState::classical(p);
    const Complex z(0.5, 2.0);
    const Element pw = c.power(z);
    for (int x = 0; x < 3; ++x) CHECK(std::abs(pw.block(x)(0, 0) - std::pow(Complex(p[x]), z)) < 1e-14);
  }

  TEST_CASE("ad examples and trace invariance") {
    const Element id = Element::identity(Algebra::matrix(2));
    const Element a = qubit({0.3, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.7});
    CHECK(approx_equal(ad(id, a), a, 1e-15));
    const Element d = qubit({0.3, 0.0, 0.0, 0.7});
    CHECK(approx_equal(ad(pauli_x(), d), qubit({0.7, 0.0, 0.0, 0.3}), 1e-15));
    const Element phase = qubit({std::exp(Complex(0, 0.4)), 0.0, 0.0, std::exp(Complex(0, -1.9))});
    CHECK(approx_equal(ad(phase, d), d, 1e-15));
    for (std::uint64_t s = 0; s < 10; ++s) {
      const Algebra alg({2, 3});
      const Element u = random_unitary(alg, s);
      const Element x = random_faithful_state(alg, 1e-2, s).element() * Complex(1.0, 2.0);
      CHECK(std::abs(trace(ad(u, x)) - trace(x)) < 1e-12);
    }
  }

  TEST_CASE("positivity examples") {
    CHECK(is_positive(Element::identity(Algebra::matrix(2))));
    CHECK_FALSE(is_positive(pauli_x()));
    const double beta[] = {0.2, 0.8};
    CHECK(is_positive(FaithfulState::classical(beta).element()));
  }

  TEST_CASE("faithful state validation") {
    CHECK_THROWS_AS(FaithfulState(qubit({1.0, 0.0, 0.0, 0.0})), NotFaithful);
    CHECK_THROWS_AS(FaithfulState(qubit({0.6, 0.0, 0.0, 0.6})), NotFaithful);
    CHECK_THROWS_AS(FaithfulState(qubit({0.5, 0.3, 0.0, 0.5})), NotFaithful);
    CHECK_THROWS_AS(FaithfulState(qubit({0.5, 0.0, 0.0, 0.5}), 0.6), NotFaithful);
    CHECK_NOTHROW(FaithfulState(qubit({0.5, 0.1, 0.1, 0.5})));
  }

  TEST_CASE("random states respect the floor and are deterministic") {
    for (std::uint64_t s = 0; s < 100; ++s) {
      const Algebra alg(s % 3 == 0 ? std::vector<int>{1, 1} : s % 3 == 1 ? std::vector<int>{3} : std::vector<int>{2, 1});
      const FaithfulState a = random_faithful_state(alg, 1e-2, s);
      CHECK(a.min_eigenvalue() >= 1e-2 - 1e-12);
      CHECK(std::abs(trace(a.element()) - 1.0) < 1e-12);
      CHECK(approx_equal(a.element(), random_faithful_state(alg, 1e-2, s).element(), 0.0));
    }
    CHECK_THROWS_AS(random_faithful_state(Algebra::matrix(2), 0.5, 0), InvalidArgument);
  }

  TEST_CASE("vectorization order is block by block, column stacking") {
    const Algebra alg({2, 1});
    Matrix b0(2, 2);
    b0 << 1.0, 2.0, 3.0, 4.0;
    Matrix b1(1, 1);
    b1 << 5.0;
    const Element e(alg, {b0, b1});
    const Vector v = e.vectorize();
    const std::vector<double> expected{1.0, 3.0, 2.0, 4.0, 5.0};
    for (int k = 0; k < 5; ++k) CHECK(v(k).real() == expected[static_cast<std::size_t>(k)]);
    CHECK(approx_equal(Element::from_vector(alg, v), e, 0.0));
  }

  TEST_CASE("tensor of elements matches the Kronecker product per block") {
    const Algebra a({2, 1}), b({1, 2});
    const Element x = random_unitary(a, 3), y = random_unitary(b, 4);
    const Element t = tensor(x, y);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK((t.block(i * 2 + j) - oracle::kron(x.block(i), y.block(j))).norm() < 1e-14);
  }
}
