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

#include "retro/surace_scandi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace retro {

namespace {

constexpr double kActiveThreshold = 1e-6;
constexpr double kSingularDet = 1e-12;

// Affine parametrization x = x0 + N z of the equality constraints, where x
// is the column-major vectorization of R.
struct Problem {
  int n;
  RealVector p;
  RealMatrix e;
  RealVector sqrt_p;
  RealMatrix constraints;
  RealVector rhs;
};

Problem make_problem(const RealVector& p, const RealMatrix& e) {
  const int n = static_cast<int>(p.size());
  const RealVector q = e * p;
  const int rows = 2 * n + n * (n - 1) / 2;
  RealMatrix c = RealMatrix::Zero(rows, n * n);
  RealVector d = RealVector::Zero(rows);
  int row = 0;
  for (int j = 0; j < n; ++j, ++row) {
    for (int i = 0; i < n; ++i) c(row, i + n * j) = 1.0;
    d(row) = 1.0;
  }
  for (int i = 0; i < n; ++i, ++row) {
    for (int j = 0; j < n; ++j) c(row, i + n * j) = q(j);
    d(row) = p(i);
  }
  // (R E diag(p))(i, k) - (R E diag(p))(k, i) = 0 for i < k.
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k, ++row)
      for (int j = 0; j < n; ++j) {
        c(row, i + n * j) += e(j, k) * p(k);
        c(row, k + n * j) -= e(j, i) * p(i);
      }
  return {n, p, e, p.cwiseSqrt(), std::move(c), std::move(d)};
}

RealMatrix null_space(const RealMatrix& c) {
  Eigen::JacobiSVD<RealMatrix> svd(c, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cut = 1e-10 * std::max(1.0, s.size() ? s(0) : 0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++rank;
  return svd.matrixV().rightCols(c.cols() - rank);
}

RealMatrix unvec(const RealVector& x, int n) { return Eigen::Map<const RealMatrix>(x.data(), n, n); }

// Symmetric M = diag(p)^{-1/2} R E diag(p)^{1/2}, similar to R E.
RealMatrix m_of(const Problem& pr, const RealMatrix& r) {
  const RealMatrix m = pr.sqrt_p.cwiseInverse().asDiagonal() * r * pr.e * pr.sqrt_p.asDiagonal();
  return 0.5 * (m + m.transpose());
}

struct Objective {
  double value;
  RealVector grad;
  RealMatrix hess;
};

std::optional<Objective> objective(const Problem& pr, const RealVector& x, const RealMatrix& basis, double mu,
                                   const std::vector<RealMatrix>& dirs) {
  const RealMatrix m = m_of(pr, unvec(x, pr.n));
  Eigen::LLT<RealMatrix> llt(m);
  if (llt.info() != Eigen::Success) return std::nullopt;
  if (mu > 0.0 && x.minCoeff() <= 0.0) return std::nullopt;
  const RealMatrix l = llt.matrixL();
  double logdet = 2.0 * l.diagonal().array().log().sum();
  const auto k = static_cast<int>(dirs.size());
  std::vector<RealMatrix> ma(static_cast<std::size_t>(k));
  RealVector g(k);
  for (int i = 0; i < k; ++i) {
    ma[static_cast<std::size_t>(i)] = llt.solve(dirs[static_cast<std::size_t>(i)]);
    g(i) = ma[static_cast<std::size_t>(i)].trace();
  }
  RealMatrix h(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      h(i, j) = -(ma[static_cast<std::size_t>(i)].cwiseProduct(ma[static_cast<std::size_t>(j)].transpose())).sum();
      h(j, i) = h(i, j);
    }
  if (mu > 0.0) {
    const RealVector inv = x.cwiseInverse();
    logdet += mu * x.array().log().sum();
    g += mu * basis.transpose() * inv;
    h -= mu * basis.transpose() * inv.cwiseAbs2().asDiagonal() * basis;
  }
  return Objective{logdet, std::move(g), std::move(h)};
}

std::vector<RealMatrix> directions(const Problem& pr, const RealMatrix& basis) {
  std::vector<RealMatrix> dirs;
  for (Eigen::Index k = 0; k < basis.cols(); ++k) dirs.push_back(m_of(pr, unvec(basis.col(k), pr.n)));
  return dirs;
}

// Damped Newton ascent on the affine slice x0 + basis * z; stays inside the
// positive-definite (and, for mu > 0, strictly positive) region.
RealVector newton(const Problem& pr, RealVector x, const RealMatrix& basis, double mu) {
  if (basis.cols() == 0) return x;
  const auto dirs = directions(pr, basis);
  for (int iter = 0; iter < 200; ++iter) {
    const auto obj = objective(pr, x, basis, mu, dirs);
    if (!obj) break;
    Eigen::LDLT<RealMatrix> ldlt(-obj->hess);
    const RealVector dz = ldlt.solve(obj->grad);
    const double decrement = obj->grad.dot(dz);
    if (!(decrement > 1e-24)) break;
    double s = 1.0;
    bool moved = false;
    for (int ls = 0; ls < 80; ++ls, s *= 0.5) {
      RealVector trial = x + s * (basis * dz);
      if (mu == 0.0 && trial.minCoeff() < 0.0) continue;
      const auto next = objective(pr, trial, basis, mu, dirs);
      if (next && next->value >= obj->value + 0.25 * s * decrement) {
        x = std::move(trial);
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return x;
}

// Gradient of log det M with respect to every entry of vec(R).
RealVector full_gradient(const Problem& pr, const RealVector& x) {
  const RealMatrix m = m_of(pr, unvec(x, pr.n));
  const RealMatrix minv = m.inverse();
  RealVector g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    RealVector unit = RealVector::Zero(x.size());
    unit(i) = 1.0;
    g(i) = (minv * m_of(pr, unvec(unit, pr.n))).trace();
  }
  return g;
}

SsResult interior_point(const Problem& pr, const RealMatrix& bayes) {
  const int n = pr.n;
  const RealMatrix uniform = pr.p * RealVector::Ones(n).transpose();
  RealVector x = Eigen::Map<const RealVector>(RealMatrix(0.5 * bayes + 0.5 * uniform).data(), n * n);
  const RealMatrix basis = null_space(pr.constraints);
  for (double mu = 1.0; mu > 1e-15; mu *= 0.1) x = newton(pr, x, basis, mu);

  std::vector<int> active;
  for (int i = 0; i < n * n; ++i)
    if (x(i) < kActiveThreshold) active.push_back(i);

  double kkt = 0.0;
  for (int round = 0; round <= n * n; ++round) {
    RealMatrix c2(pr.constraints.rows() + static_cast<Eigen::Index>(active.size()), n * n);
    RealVector d2 = RealVector::Zero(c2.rows());
    c2.topRows(pr.constraints.rows()) = pr.constraints;
    d2.head(pr.rhs.size()) = pr.rhs;
    for (std::size_t a = 0; a < active.size(); ++a) {
      c2.row(pr.constraints.rows() + static_cast<Eigen::Index>(a)).setZero();
      c2(pr.constraints.rows() + static_cast<Eigen::Index>(a), active[a]) = 1.0;
    }
    Eigen::CompleteOrthogonalDecomposition<RealMatrix> cod(c2);
    RealVector y = x - cod.solve(c2 * x - d2);
    for (int a : active) y(a) = 0.0;
    y = newton(pr, y, null_space(c2), 0.0);
    for (int a : active) y(a) = 0.0;

    // Multipliers of the active bounds: N^T (grad + sum lambda_a e_a) = 0.
    const RealVector g = full_gradient(pr, y);
    const RealVector rg = basis.transpose() * g;
    if (active.empty()) {
      x = y;
      kkt = rg.norm();
      break;
    }
    RealMatrix b(basis.cols(), static_cast<Eigen::Index>(active.size()));
    for (std::size_t a = 0; a < active.size(); ++a) b.col(static_cast<Eigen::Index>(a)) = basis.row(active[a]).transpose();
    const RealVector lambda = b.completeOrthogonalDecomposition().solve(-rg);
    kkt = (b * lambda + rg).norm();
    Eigen::Index worst = 0;
    const double most_negative = lambda.minCoeff(&worst);
    x = y;
    if (most_negative >= -1e-8) break;
    active.erase(active.begin() + worst);
  }

  SsResult res;
  res.r = unvec(x, n);
  res.method = "interior_point";
  res.kkt_residual = kkt;
  return res;
}

}  // namespace

SsResult solve_surace_scandi(const RealVector& p, const RealMatrix& e) {
  const auto n = p.size();
  if (e.rows() != n || e.cols() != n) throw Inapplicable("recovery needs equal input and output cardinality");
  if (p.minCoeff() <= 0.0 || std::abs(p.sum() - 1.0) > 1e-9) throw InvalidArgument("prior is not a faithful distribution");
  if (e.minCoeff() < -1e-12 || (e.colwise().sum().array() - 1.0).abs().maxCoeff() > 1e-9)
    throw NotCptp("matrix is not column-stochastic");

  SsResult res;
  const double det_e = e.determinant();
  res.unique = std::abs(det_e) > kSingularDet;

  bool permutation = true;
  for (Eigen::Index i = 0; i < e.size() && permutation; ++i) {
    const double v = e.data()[i];
    permutation = std::abs(v) < 1e-12 || std::abs(v - 1.0) < 1e-12;
  }
  if (permutation) {
    res.r = e.transpose().array().round().matrix();
    res.method = "permutation";
  } else if (!res.unique) {
    throw Infeasible("singular channel: every admissible recovery has zero determinant");
  } else if (n == 2) {
    const auto r = surace_scandi_2x2<double>({p(0), p(1)}, {e(0, 0), e(0, 1), e(1, 0), e(1, 1)});
    res.r.resize(2, 2);
    res.r << r[0], r[1], r[2], r[3];
    res.method = "closed_form";
  } else {
    const RealVector q = e * p;
    const RealMatrix bayes = p.asDiagonal() * e.transpose() * q.cwiseInverse().asDiagonal();
    const bool unique = res.unique;
    res = interior_point(make_problem(p, e), bayes);
    res.unique = unique;
  }
  res.determinant = (res.r * e).determinant();
  if (!(res.determinant > 0.0)) throw Infeasible("no admissible recovery with positive determinant");
  return res;
}

Channel surace_scandi_classical(const FaithfulState& p, const Channel& e) {
  if (!e.source().is_commutative() || !e.target().is_commutative())
    throw Inapplicable("determinant-maximizing recovery is implemented for commutative algebras only");
  if (e.source().num_blocks() != e.target().num_blocks())
    throw Inapplicable("determinant-maximizing recovery needs equal cardinalities");
  require_same(p.algebra(), e.source(), "surace_scandi_classical");
  const int n = p.algebra().num_blocks();
  RealVector pv(n);
  for (int x = 0; x < n; ++x) pv(x) = p.element().block(x)(0, 0).real();
  return Channel::from_stochastic(solve_surace_scandi(pv, e.stochastic()).r);
}

}  // namespace retro
