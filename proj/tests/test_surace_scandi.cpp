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

#include <boost/rational.hpp>
#include <random>

#include "oracles.hpp"
#include "retro/surace_scandi.hpp"

using namespace retro;

namespace {

// Affine description {vec R : A vec R = b} of the linear constraints:
// unit column sums, R q = p and symmetry of R E diag(p).
struct Constraints {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
};

Constraints linear_constraints(const Eigen::VectorXd& p, const RealMatrix& e) {
  const int n = static_cast<int>(p.size());
  const Eigen::VectorXd q = e * p;
  std::vector<Eigen::VectorXd> rows;
  std::vector<double> rhs;
  auto idx = [n](int i, int j) { return j * n + i; };  // column-major vec
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd r = Eigen::VectorXd::Zero(n * n);
    for (int i = 0; i < n; ++i) r(idx(i, j)) = 1.0;
    rows.push_back(r);
    rhs.push_back(1.0);
  }
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd r = Eigen::VectorXd::Zero(n * n);
    for (int j = 0; j < n; ++j) r(idx(i, j)) = q(j);
    rows.push_back(r);
    rhs.push_back(p(i));
  }
  // (R E diag p)(i, k) = sum_j R(i, j) E(j, k) p(k).
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) {
      Eigen::VectorXd r = Eigen::VectorXd::Zero(n * n);
      for (int j = 0; j < n; ++j) {
        r(idx(i, j)) += e(j, k) * p(k);
        r(idx(k, j)) -= e(j, i) * p(i);
      }
      rows.push_back(r);
      rhs.push_back(0.0);
    }
  Constraints c{Eigen::MatrixXd(rows.size(), n * n), Eigen::VectorXd(rows.size())};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    c.a.row(static_cast<int>(r)) = rows[r].transpose();
    c.b(static_cast<int>(r)) = rhs[r];
  }
  return c;
}

bool spectrum_nonnegative(const RealMatrix& m) {
  const Eigen::VectorXcd ev = m.eigenvalues();
  for (int i = 0; i < ev.size(); ++i)
    if (ev(i).real() < -1e-12) return false;
  return true;
}

// Hit-and-run over the feasible polytope started at the Bayes inverse;
// returns the best determinant seen.
double sampled_max_det(const Eigen::VectorXd& p, const RealMatrix& e, int steps, std::mt19937_64& g) {
  const int n = static_cast<int>(p.size());
  const Constraints c = linear_constraints(p, e);
  const Eigen::MatrixXd kernel = Eigen::FullPivLU<Eigen::MatrixXd>(c.a).kernel();
  const RealMatrix start = oracle::bayes(p, e);
  Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(start.data(), n * n);
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double best = (start * e).determinant();
  for (int s = 0; s < steps; ++s) {
    Eigen::VectorXd w(kernel.cols());
    for (int k = 0; k < w.size(); ++k) w(k) = nd(g);
    const Eigen::VectorXd d = kernel * w.normalized();
    double lo = -1e9, hi = 1e9;
    for (int k = 0; k < d.size(); ++k) {
      if (d(k) > 1e-14) lo = std::max(lo, -x(k) / d(k));
      if (d(k) < -1e-14) hi = std::min(hi, -x(k) / d(k));
    }
    // Alternate uniform moves with moves to the segment ends, where optima live.
    const double r = u(g);
    const double step = s % 3 == 0 ? (r < 0.5 ? lo : hi) : lo + r * (hi - lo);
    const Eigen::VectorXd y = x + step * d;
    const RealMatrix ry = Eigen::Map<const RealMatrix>(y.data(), n, n);
    const RealMatrix m = ry * e;
    if (!spectrum_nonnegative(m)) continue;
    best = std::max(best, m.determinant());
    if (s % 3 != 0) x = y;
  }
  return best;
}

}  // namespace

TEST_SUITE("surace_scandi") {
  TEST_CASE("worked 2x2 instance in floating point") {
    RealVector p(2);
    p << 0.5, 0.5;
    RealMatrix e(2, 2);
    e << 0.1, 0.3, 0.9, 0.7;
    const SsResult r = solve_surace_scandi(p, e);
    RealMatrix expect(2, 2);
    expect << 0.0, 5.0 / 8, 1.0, 3.0 / 8;
    CHECK((r.r - expect).norm() < 1e-12);
    CHECK(r.unique);
    CHECK(r.method == "closed_form");
  }

  TEST_CASE("closed form over exact rationals") {
    using Q = boost::rational<long long>;
    const auto r = surace_scandi_2x2<Q>({Q(1, 5), Q(4, 5)}, {Q(3, 10), Q(6, 10), Q(7, 10), Q(4, 10)});
    CHECK(r[0] == Q(0));
    CHECK(r[1] == Q(10, 23));
    CHECK(r[2] == Q(1));
    CHECK(r[3] == Q(13, 23));
  }

  TEST_CASE("2x2 closed form matches a scan of the single free parameter") {
    std::mt19937_64 g(3);
    for (int trial = 0; trial < 30; ++trial) {
      const Eigen::VectorXd p = oracle::random_probability(2, g);
      const RealMatrix e = oracle::random_stochastic(2, 2, g);
      const SsResult r = solve_surace_scandi(p, e);
      const Eigen::VectorXd q = e * p;
      double best = -1.0;
      for (int k = 0; k <= 200000; ++k) {
        const double b = k / 200000.0;
        const double a = (p(0) - b * q(1)) / q(0);
        if (a < 0.0 || a > 1.0) continue;
        RealMatrix rr(2, 2);
        rr << a, b, 1 - a, 1 - b;
        const RealMatrix m = rr * e;
        if (!spectrum_nonnegative(m)) continue;
        best = std::max(best, m.determinant());
      }
      CHECK(r.determinant >= best - 1e-12);
      CHECK(r.determinant <= best + 1e-4);
    }
  }

  TEST_CASE("constraints hold for larger random instances") {
    std::mt19937_64 g(4);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 3 + trial % 3;
      const Eigen::VectorXd p = oracle::random_probability(n, g);
      const RealMatrix e = oracle::random_stochastic(n, n, g);
      const SsResult r = solve_surace_scandi(p, e);
      const Constraints c = linear_constraints(p, e);
      const Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(r.r.data(), n * n);
      CHECK((c.a * v - c.b).cwiseAbs().maxCoeff() < 1e-9);
      CHECK(r.r.minCoeff() >= -1e-12);
      CHECK(spectrum_nonnegative(r.r * e));
      CHECK(r.determinant == doctest::Approx((r.r * e).determinant()).epsilon(1e-9));
      CHECK(r.unique);
      CHECK(r.kkt_residual < 1e-7);
    }
  }

  TEST_CASE("no sampled feasible point beats the solver") {
    std::mt19937_64 g(5);
    for (int trial = 0; trial < 12; ++trial) {
      const int n = 3 + trial % 2;
      const Eigen::VectorXd p = oracle::random_probability(n, g);
      const RealMatrix e = oracle::random_stochastic(n, n, g);
      const SsResult r = solve_surace_scandi(p, e);
      const double sampled = sampled_max_det(p, e, 20000, g);
      CHECK(sampled <= r.determinant * (1.0 + 1e-9) + 1e-14);
    }
  }

  TEST_CASE("structural cases") {
    RealVector p(3);
    p << 0.2, 0.5, 0.3;
    const RealMatrix id = RealMatrix::Identity(3, 3);
    CHECK((solve_surace_scandi(p, id).r - id).norm() < 1e-12);
    RealMatrix perm = RealMatrix::Zero(3, 3);
    perm(1, 0) = perm(2, 1) = perm(0, 2) = 1.0;
    const SsResult r = solve_surace_scandi(p, perm);
    CHECK((r.r - perm.transpose()).norm() < 1e-15);
    CHECK(r.method == "permutation");

    RealMatrix singular(3, 3);
    singular << 0.5, 0.5, 0.2, 0.5, 0.5, 0.3, 0.0, 0.0, 0.5;
    CHECK_THROWS_AS(solve_surace_scandi(p, singular), Infeasible);
    CHECK_THROWS_AS(solve_surace_scandi(p, RealMatrix::Constant(3, 2, 0.5)), Inapplicable);
  }
}
