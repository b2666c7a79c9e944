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

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace retro {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Default operator-norm tolerance for "equality" checks.
inline constexpr double kDefaultTol = 1e-9;

/// (A + A^dagger) / 2.
template <typename Derived>
auto hermitian_part(const Eigen::MatrixBase<Derived>& a) {
  using PlainT = typename Derived::PlainObject;
  PlainT h = (a + a.adjoint()) / typename Derived::Scalar(2);
  return h;
}

/// Largest singular value.
template <typename Derived>
double operator_norm(const Eigen::MatrixBase<Derived>& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<typename Derived::PlainObject> svd(a.derived());
  return svd.singularValues()(0);
}

/// Kronecker product, row index of the result is i * b.rows() + k.
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Applies a scalar function to the spectrum of a Hermitian matrix.
/// The input is symmetrized first to absorb round-off.
template <typename Derived, typename Fn>
Matrix hermitian_function(const Eigen::MatrixBase<Derived>& a, Fn&& fn) {
  Matrix h = hermitian_part(Matrix(a));
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const RealVector& lambda = es.eigenvalues();
  Vector mapped(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) mapped(i) = fn(lambda(i));
  return es.eigenvectors() * mapped.asDiagonal() * es.eigenvectors().adjoint();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a, double tol = kDefaultTol) {
  return a.rows() == a.cols() && operator_norm(a - a.adjoint()) <= tol;
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& u, double tol = kDefaultTol) {
  if (u.rows() != u.cols()) return false;
  const auto n = u.rows();
  return operator_norm(u.adjoint() * u - Matrix::Identity(n, n)) <= tol;
}

/// Smallest eigenvalue of the Hermitian part.
template <typename Derived>
double min_eigenvalue(const Eigen::MatrixBase<Derived>& a) {
  if (a.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(Matrix(a)), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

/// PSD up to a scale-aware guard: eigenvalues >= -tol * (1 + ||a||).
template <typename Derived>
bool is_psd(const Eigen::MatrixBase<Derived>& a, double tol = kDefaultTol) {
  if (a.size() == 0) return true;
  Matrix h(a);
  if (operator_norm(h - h.adjoint()) > tol * (1.0 + operator_norm(h))) return false;
  return min_eigenvalue(h) >= -tol * (1.0 + operator_norm(h));
}

}  // namespace retro
