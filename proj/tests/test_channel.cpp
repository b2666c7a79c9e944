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
#include <functional>
#include <random>

#include "oracles.hpp"
#include "retro/random.hpp"
#include "retro/retrodiction.hpp"

using namespace retro;

namespace {

Matrix dense_choi(int n, const std::function<Matrix(const Matrix&)>& map) {
  Matrix c = Matrix::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix e = Matrix::Zero(n, n);
      e(i, j) = 1.0;
      c.block(i * n, j * n, n, n) = map(e);
    }
  return c;
}

Element random_element(const Algebra& a, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Matrix> blocks;
  for (int m : a.block_dims()) blocks.push_back(rng.gaussian_matrix(m, m));
  return Element(a, std::move(blocks));
}

const Algebra kC2 = Algebra::classical(2);

}  // namespace

TEST_SUITE("channel") {
  TEST_CASE("apply examples") {
    const Element x = random_element(Algebra::matrix(2), 1);
    CHECK(approx_equal(Channel::identity(Algebra::matrix(2)).apply(x), x, 0.0));
    const double th = 0.2, p = 0.35;
    const double d[] = {th, 1 - th};
    const Element out = bit_flip(p).apply(FaithfulState::diagonal_matrix(d).element());
    CHECK(std::abs(out.block(0)(0, 0).real() - ((1 - p) * th + p * (1 - th))) < 1e-15);
    CHECK(std::abs(out.block(0)(0, 1)) < 1e-15);
    RealMatrix e(2, 2);
    e << 0.1, 0.3, 0.9, 0.7;
    const double half[] = {0.5, 0.5};
    const Element q = Channel::from_stochastic(e).apply(FaithfulState::classical(half).element());
    CHECK(std::abs(q.block(0)(0, 0).real() - 0.2) < 1e-15);
    CHECK(std::abs(q.block(1)(0, 0).real() - 0.8) < 1e-15);
    CHECK_THROWS_AS(bit_flip(0.3).apply(Element::identity(kC2)), AlgebraMismatch);
  }

  TEST_CASE("linearity") {
    const Channel c = random_channel(Algebra({2, 1}), Algebra({1, 2}), 2, 5);
    const Element x = random_element(Algebra({2, 1}), 6), y = random_element(Algebra({2, 1}), 7);
    const Complex a(0.3, -1.2), b(2.0, 0.5);
    CHECK(approx_equal(c.apply(x * a + y * b), c.apply(x) * a + c.apply(y) * b, 1e-12));
  }

  TEST_CASE("composition examples") {
    const Channel e = random_channel(Algebra::matrix(2), Algebra({2, 1}), 2, 3);
    CHECK(approx_equal(compose(Channel::identity(e.target()), e), e, 1e-14));
    const double p = 0.2, q = 0.45;
    CHECK(approx_equal(compose(bit_flip(q), bit_flip(p)), bit_flip((1 - q) * p + q * (1 - p)), 1e-14));
    CHECK(approx_equal(compose(Channel::ad(pauli_x()), Channel::ad(pauli_x())), Channel::identity(Algebra::matrix(2)),
                       1e-14));
    CHECK_THROWS_AS(compose(bit_flip(0.2), Channel::identity(kC2)), AlgebraMismatch);
  }

  TEST_CASE("composition acts as function composition") {
    const Algebra a({2}), b({1, 1, 1}), c({2, 1});
    const Channel e = random_channel(a, b, 2, 1), f = random_channel(b, c, 2, 2);
    const Element x = random_element(a, 3);
    CHECK(approx_equal(compose(f, e).apply(x), f.apply(e.apply(x)), 1e-12));
  }

  TEST_CASE("tensor examples") {
    const Algebra a({2, 1});
    const Channel id = Channel::identity(a);
    CHECK(approx_equal(tensor(id, id), Channel::identity(tensor(a, a)), 1e-14));

    // (1-p) X + p sX s on each factor, expanded by hand on E01 (x) E01.
    const Channel half = bit_flip(0.5);
    const Element out = tensor(half, half).apply(tensor(e01(), e01()));
    const Matrix sx = pauli_x().block(0);
    CHECK((out.block(0) - 0.25 * oracle::kron(sx, sx)).norm() < 1e-14);

    for (std::uint64_t s = 0; s < 10; ++s) {
      const Algebra p({2, 1}), q({1, 1});
      const Channel e1 = random_channel(p, q, 2, s), e2 = random_channel(q, p, 2, s + 50);
      const Element x = random_element(p, s + 1), y = random_element(q, s + 2);
      CHECK(approx_equal(tensor(e1, e2).apply(tensor(x, y)), tensor(e1.apply(x), e2.apply(y)), 1e-12));
      const Element big = random_element(tensor(p, q), s + 3);
      CHECK(std::abs(trace(tensor(e1, e2).apply(big)) - trace(big)) < 1e-12);
    }
  }

  TEST_CASE("interchange law") {
    for (std::uint64_t s = 0; s < 5; ++s) {
      const Algebra a({2}), b({1, 1}), c({2, 1});
      const Channel e = random_channel(a, b, 2, s), f = random_channel(b, c, 2, s + 10);
      const Channel e2 = random_channel(b, a, 2, s + 20), f2 = random_channel(a, a, 2, s + 30);
      CHECK(approx_equal(compose(tensor(f, f2), tensor(e, e2)), tensor(compose(f, e), compose(f2, e2)), 1e-9));
    }
  }

  TEST_CASE("hilbert-schmidt adjoint") {
    const Algebra a({2, 1}), b({3});
    const Channel e = random_channel(a, b, 2, 9);
    const Channel adj = hs_adjoint(e);
    for (std::uint64_t s = 0; s < 5; ++s) {
      const Element x = random_element(a, s), y = random_element(b, s + 100);
      CHECK(std::abs(hs_inner(adj.apply(y), x) - hs_inner(y, e.apply(x))) < 1e-12);
    }
    CHECK(approx_equal(adj.apply(Element::identity(b)), Element::identity(a), 1e-12));
    CHECK(approx_equal(hs_adjoint(adj), e, 1e-15));
    const Channel f = random_channel(b, Algebra({1, 1}), 2, 10);
    CHECK(approx_equal(hs_adjoint(compose(f, e)), compose(adj, hs_adjoint(f)), 1e-9));
    CHECK(approx_equal(hs_adjoint(Channel::identity(a)), Channel::identity(a), 0.0));
    const Element u = random_unitary(b, 4);
    CHECK(approx_equal(hs_adjoint(Channel::ad(u)), Channel::ad(u.adjoint()), 1e-13));

    // Trace functional M_2 -> C and its adjoint, the unit embedding.
    const Channel tr = Channel::from_function(Algebra::matrix(2), Algebra::classical(1), [](const Element& x) {
      return Element(Algebra::classical(1), {Matrix::Constant(1, 1, trace(x))});
    });
    const Element one(Algebra::classical(1), {Matrix::Constant(1, 1, 1.0)});
    CHECK(approx_equal(hs_adjoint(tr).apply(one), Element::identity(Algebra::matrix(2)), 1e-15));
  }

  TEST_CASE("choi examples") {
    const auto id = choi_blocks(Channel::identity(Algebra::matrix(2)));
    Matrix expect = Matrix::Zero(4, 4);
    expect(0, 0) = expect(0, 3) = expect(3, 0) = expect(3, 3) = 1.0;
    CHECK((id[0] - expect).norm() < 1e-15);

    const double p = 0.3;
    Matrix bf(4, 4);
    bf << 1 - p, 0, 0, 1 - p, 0, p, p, 0, 0, p, p, 0, 1 - p, 0, 0, 1 - p;
    CHECK((choi_blocks(bit_flip(p))[0] - bf).norm() < 1e-15);
  }

  TEST_CASE("choi matches a dense oracle for Kraus channels") {
    std::mt19937_64 g(1);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 2 + trial % 2;
      const auto k = oracle::random_kraus(n, n, 1 + trial % 3, g);
      const Channel c = Channel::from_kraus(Algebra::matrix(n), Algebra::matrix(n), k);
      const Matrix expect = dense_choi(n, [&](const Matrix& x) { return oracle::apply_kraus(k, x); });
      CHECK((choi_blocks(c)[0] - expect).norm() < 1e-12);
      CHECK(is_cptp(c));
    }
  }

  TEST_CASE("cptp examples") {
    CHECK(is_cptp(bit_flip(0.3)));
    const CptpReport t = check_cptp(transpose_map(2));
    CHECK_FALSE(t.ok);
    CHECK(t.min_choi_eigenvalue == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(t.trace_error < 1e-15);
    // Trace-scaling map: CP but not trace preserving.
    CHECK_FALSE(is_cptp(Channel::identity(Algebra::matrix(2)) * Complex(0.9)));
  }

  TEST_CASE("choi positivity tracks complete positivity") {
    std::mt19937_64 g(2);
    for (int trial = 0; trial < 10; ++trial) {
      const auto k = oracle::random_kraus(2, 2, 2, g);
      const Channel c = Channel::from_kraus(Algebra::matrix(2), Algebra::matrix(2), k);
      // Mixing in the transpose destroys CP once its weight is large enough.
      const Channel mix = c * Complex(0.3) + transpose_map(2) * Complex(0.7);
      CHECK(is_cptp(c));
      CHECK_FALSE(is_cptp(mix));
    }
  }

  TEST_CASE("random channels are CPTP and deterministic") {
    const std::vector<std::vector<int>> shapes{{2}, {3}, {1, 1}, {1, 1, 1}, {2, 1}};
    for (std::uint64_t s = 0; s < 100; ++s) {
      const Algebra a(shapes[s % 5]), b(shapes[(s / 5) % 5]);
      const Channel c = random_channel(a, b, 1 + static_cast<int>(s % 3), s);
      CHECK(check_cptp(c).ok);
      CHECK(approx_equal(c, random_channel(a, b, 1 + static_cast<int>(s % 3), s), 0.0));
    }
    // Trivial environment between full matrix algebras is a unitary conjugation.
    const Channel u = random_channel(Algebra::matrix(3), Algebra::matrix(3), 1, 8);
    CHECK(is_star_isomorphism(u));
  }

  TEST_CASE("covariance") {
    const Channel e = random_channel(Algebra::matrix(2), Algebra({2, 1}), 2, 3);
    CHECK_FALSE(is_covariant(e, random_faithful_state(Algebra::matrix(2), 1e-2, 1)));
    const double d[] = {0.2, 0.8};
    CHECK_FALSE(is_covariant(bit_flip(0.3), FaithfulState::diagonal_matrix(d)));
    CHECK(is_covariant(random_mixed_unitary(Algebra({2, 1}), 3, 4), FaithfulState::maximally_mixed(Algebra({2, 1}))));
    for (std::uint64_t s = 0; s < 5; ++s) {
      const Algebra a({2, 2, 1});
      CHECK(is_covariant(random_isomorphism(a, s), random_faithful_state(a, 1e-2, s)));
    }
  }

  TEST_CASE("covariant channels have t-independent rotated maps") {
    for (std::uint64_t s = 0; s < 5; ++s) {
      const Algebra a({2, 1});
      const FaithfulState alpha = random_faithful_state(a, 1e-2, s);
      const Channel iso = random_isomorphism(a, s + 7);
      REQUIRE(is_covariant(iso, alpha));
      CHECK(approx_equal(rotated_petz(alpha, iso, 0.9), petz(alpha, iso), 1e-9));
    }
  }

  TEST_CASE("star isomorphism detection") {
    CHECK(is_star_isomorphism(Channel::ad(random_unitary(Algebra({2, 1}), 2))));
    CHECK_FALSE(is_star_isomorphism(bit_flip(0.5)));
    CHECK_FALSE(is_star_isomorphism(bit_flip(0.3)));
    CHECK_FALSE(is_star_isomorphism(transpose_map(2)));
    CHECK(is_star_isomorphism(permutation_channel({2, 0, 1})));
    CHECK_FALSE(is_star_isomorphism(random_channel(Algebra::matrix(2), Algebra::classical(4), 2, 1)));
  }

  TEST_CASE("inverse of isomorphisms") {
    const Algebra a({2, 1});
    CHECK(approx_equal(invert_iso(Channel::identity(a)), Channel::identity(a), 1e-12));
    const Element u = random_unitary(a, 3);
    CHECK(approx_equal(invert_iso(Channel::ad(u)), Channel::ad(u.adjoint()), 1e-12));
    const Channel swap = permutation_channel({1, 0});
    CHECK(approx_equal(invert_iso(swap), swap, 1e-12));
    const Channel cyc = permutation_channel({1, 2, 0});
    CHECK(approx_equal(compose(cyc, invert_iso(cyc)), Channel::identity(Algebra::classical(3)), 1e-12));
    CHECK_THROWS_AS(invert_iso(bit_flip(0.2)), Inapplicable);
  }

  TEST_CASE("bit flip examples") {
    CHECK(approx_equal(bit_flip(0.0), Channel::identity(Algebra::matrix(2)), 0.0));
    CHECK(approx_equal(bit_flip(1.0), Channel::ad(pauli_x()), 1e-15));
    const double d[] = {0.9, 0.1};
    CHECK(approx_equal(bit_flip(0.5).apply(FaithfulState::diagonal_matrix(d).element()),
                       FaithfulState::maximally_mixed(Algebra::matrix(2)).element(), 1e-15));
    CHECK_THROWS_AS(bit_flip(1.5), InvalidArgument);
  }
}
