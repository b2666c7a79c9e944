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

// Test-side reference implementations. They work on plain dense matrices
// and share no code with the library beyond the Eigen type aliases.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;

inline Mat herm_power(const Mat& a, Complex z) {
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (a + a.adjoint()));
  Eigen::VectorXcd d(es.eigenvalues().size());
  for (int i = 0; i < d.size(); ++i) d(i) = std::exp(z * std::log(es.eigenvalues()(i)));
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Mat apply_kraus(const std::vector<Mat>& k, const Mat& x) {
  Mat out = Mat::Zero(k.front().rows(), k.front().rows());
  for (const auto& m : k) out += m * x * m.adjoint();
  return out;
}

inline Mat apply_kraus_adjoint(const std::vector<Mat>& k, const Mat& y) {
  Mat out = Mat::Zero(k.front().cols(), k.front().cols());
  for (const auto& m : k) out += m.adjoint() * y * m;
  return out;
}

/// Rotated Petz map of a full-matrix channel given by Kraus operators,
/// evaluated on one input: a^{1/2 - it} E*(b^{-1/2 + it} x b^{-1/2 - it}) a^{1/2 + it}.
inline Mat rotated_petz_apply(const Mat& alpha, const std::vector<Mat>& k, const Mat& x, double t) {
  const Mat beta = apply_kraus(k, alpha);
  const Mat bl = herm_power(beta, Complex(-0.5, t));
  const Mat br = herm_power(beta, Complex(-0.5, -t));
  const Mat al = herm_power(alpha, Complex(0.5, -t));
  const Mat ar = herm_power(alpha, Complex(0.5, t));
  return al * apply_kraus_adjoint(k, bl * x * br) * ar;
}

/// Bayes inverse of a column-stochastic matrix: R(x, y) = E(y, x) p(x) / q(y).
inline RMat bayes(const Eigen::VectorXd& p, const RMat& e) {
  const Eigen::VectorXd q = e * p;
  RMat r(e.cols(), e.rows());
  for (int x = 0; x < e.cols(); ++x)
    for (int y = 0; y < e.rows(); ++y) r(x, y) = e(y, x) * p(x) / q(y);
  return r;
}

/// Random column-stochastic matrix with entries bounded away from zero.
inline RMat random_stochastic(int rows, int cols, std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  RMat e(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) e(i, j) = u(g);
    e.col(j) /= e.col(j).sum();
  }
  return e;
}

inline Eigen::VectorXd random_probability(int n, std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(0.1, 1.0);
  Eigen::VectorXd p(n);
  for (int i = 0; i < n; ++i) p(i) = u(g);
  return p / p.sum();
}

/// Haar-ish random Kraus family (n_out x n_in), normalized so that
/// sum K^dagger K = I via the inverse square root of the Gram operator.
inline std::vector<Mat> random_kraus(int n_out, int n_in, int terms, std::mt19937_64& g) {
  std::normal_distribution<double> nd;
  std::vector<Mat> k;
  Mat gram = Mat::Zero(n_in, n_in);
  for (int t = 0; t < terms; ++t) {
    Mat m(n_out, n_in);
    for (int i = 0; i < n_out; ++i)
      for (int j = 0; j < n_in; ++j) m(i, j) = Complex(nd(g), nd(g));
    gram += m.adjoint() * m;
    k.push_back(m);
  }
  const Mat s = herm_power(gram, Complex(-0.5, 0.0));
  for (auto& m : k) m = m * s;
  return k;
}

inline Mat random_density(int n, std::mt19937_64& g) {
  std::normal_distribution<double> nd;
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(nd(g), nd(g));
  Mat r = m * m.adjoint() + 0.05 * Mat::Identity(n, n);
  return r / r.trace();
}

}  // namespace oracle
