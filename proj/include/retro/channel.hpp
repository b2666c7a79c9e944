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

#include <atomic>
#include <functional>
#include <string>
#include <vector>

#include "retro/algebra.hpp"

namespace retro {

/// Linear map between algebras, stored as a (target.total_dim x
/// source.total_dim) matrix on vectorized elements.
class Channel {
 public:
  Channel(Algebra source, Algebra target, Matrix matrix);
  Channel(const Channel& other);
  Channel(Channel&& other) noexcept;
  Channel& operator=(const Channel& other);
  Channel& operator=(Channel&& other) noexcept;
  ~Channel() = default;

  static Channel identity(const Algebra& a);
  /// X -> u X u^dagger.
  static Channel ad(const Element& u);
  /// Builds the matrix column by column from the images of matrix units.
  static Channel from_function(const Algebra& source, const Algebra& target,
                               const std::function<Element(const Element&)>& fn);
  /// X -> pinch(sum_k K_k X K_k^dagger), K_k of shape
  /// (target.matrix_dim x source.matrix_dim) acting on the block-diagonal embedding.
  static Channel from_kraus(const Algebra& source, const Algebra& target,
                            const std::vector<Matrix>& kraus);
  /// Column-stochastic matrix E, E(y, x) = P(y | x).
  static Channel from_stochastic(const RealMatrix& e);

  const Algebra& source() const { return source_; }
  const Algebra& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

  Element apply(const Element& a) const;
  Element operator()(const Element& a) const { return apply(a); }

  /// Real part of the matrix for maps between commutative algebras.
  RealMatrix stochastic() const;

  enum class CptpStatus : int { kUnknown = 0, kVerified = 1, kFailed = 2 };
  CptpStatus cptp_status() const { return static_cast<CptpStatus>(cptp_.load(std::memory_order_acquire)); }
  /// Idempotent publication of a computed status.
  void cache_cptp(bool ok) const {
    cptp_.store(static_cast<int>(ok ? CptpStatus::kVerified : CptpStatus::kFailed), std::memory_order_release);
  }

  Channel& operator+=(const Channel& other);
  Channel& operator*=(Complex s);
  friend Channel operator+(Channel a, const Channel& b) { return a += b; }
  friend Channel operator-(Channel a, const Channel& b) { return a += b * Complex(-1.0); }
  friend Channel operator*(Channel a, Complex s) { return a *= s; }
  friend Channel operator*(Complex s, Channel a) { return a *= s; }

 private:
  Algebra source_;
  Algebra target_;
  Matrix matrix_;
  mutable std::atomic<int> cptp_{0};
};

/// f after e.
Channel compose(const Channel& f, const Channel& e);
Channel operator*(const Channel& f, const Channel& e);
Channel tensor(const Channel& e, const Channel& e2);
/// Adjoint with respect to the Hilbert-Schmidt inner product.
Channel hs_adjoint(const Channel& e);

/// Index map from the Kronecker order of (a.vec, b.vec) to the vectorization
/// of tensor(a, b): result[ia * b.total_dim() + ib] = product index.
std::vector<int> tensor_index_map(const Algebra& a, const Algebra& b);

/// One Choi matrix per source block x: sum_ij E_ij (x) dense(e(E_ij)), with
/// row index i * target.matrix_dim + k.
std::vector<Matrix> choi_blocks(const Channel& e);

struct CptpReport {
  bool ok = false;
  double min_choi_eigenvalue = 0.0;
  double trace_error = 0.0;
  std::string diagnostic;
};

CptpReport check_cptp(const Channel& e, double tol = kDefaultTol);
/// Cached for the default tolerance.
bool is_cptp(const Channel& e, double tol = kDefaultTol);

/// Generator form of covariance: e([log a, X]) = [log b, e(X)] with b = e(a).
/// Throws NotFaithful if e(a) is not faithful.
bool is_covariant(const Channel& e, const FaithfulState& alpha, double tol = kDefaultTol);

bool is_star_isomorphism(const Channel& e, double tol = kDefaultTol);
/// Throws Inapplicable unless e is a *-isomorphism.
Channel invert_iso(const Channel& e, double tol = kDefaultTol);

/// Operator norm of the superoperator difference divided by the source
/// matrix dimension.
double deviation(const Channel& a, const Channel& b);
bool approx_equal(const Channel& a, const Channel& b, double tol = kDefaultTol);

/// The image e(alpha) as a faithful state; throws NotFaithful otherwise.
FaithfulState predict(const Channel& e, const FaithfulState& alpha);

// Standard instances.

Element pauli_x();
Element pauli_y();
Element pauli_z();
/// [[0,1],[0,0]] on M_2.
Element e01();

/// (1 - p) id + p Ad_{sigma_x} on M_2.
Channel bit_flip(double p);
/// Transpose on M_n (positive, not completely positive).
Channel transpose_map(int n);
/// Permutation of the points of C^n: delta_x -> delta_{perm[x]}.
Channel permutation_channel(const std::vector<int>& perm);

}  // namespace retro
