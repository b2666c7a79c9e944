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

#include <span>
#include <string>
#include <vector>

#include "retro/errors.hpp"
#include "retro/matrix_functions.hpp"

namespace retro {

/// A finite-dimensional C*-algebra, realized as a direct sum of full matrix
/// algebras M_{m_0} + M_{m_1} + ... in a fixed block order.
///
/// Elements are vectorized block by block, each block column-stacked. Every
/// superoperator in the library uses this convention.
class Algebra {
 public:
  explicit Algebra(std::vector<int> block_dims);

  /// M_m(C).
  static Algebra matrix(int m) { return Algebra({m}); }
  /// C^n, i.e. n one-dimensional blocks.
  static Algebra classical(int n);

  const std::vector<int>& block_dims() const { return dims_; }
  int num_blocks() const { return static_cast<int>(dims_.size()); }
  int block_dim(int x) const { return dims_[static_cast<std::size_t>(x)]; }
  /// Dimension as a complex vector space (sum of m_x^2).
  int total_dim() const { return total_dim_; }
  /// Dimension of the Hilbert space the algebra acts on (sum of m_x).
  int matrix_dim() const { return matrix_dim_; }
  /// Offset of block x in the vectorized representation.
  int offset(int x) const { return offsets_[static_cast<std::size_t>(x)]; }
  bool is_commutative() const;

  friend bool operator==(const Algebra& a, const Algebra& b) { return a.dims_ == b.dims_; }

 private:
  std::vector<int> dims_;
  std::vector<int> offsets_;
  int total_dim_ = 0;
  int matrix_dim_ = 0;
};

/// Blocks ordered x-major: block (x, y) sits at index x * b.num_blocks() + y.
Algebra tensor(const Algebra& a, const Algebra& b);

std::string to_string(const Algebra& a);

/// One complex matrix per block of the parent algebra.
class Element {
 public:
  Element(Algebra algebra, std::vector<Matrix> blocks);

  static Element zero(const Algebra& a);
  static Element identity(const Algebra& a);
  /// |i><j| inside block x.
  static Element matrix_unit(const Algebra& a, int x, int i, int j);
  static Element from_vector(const Algebra& a, const Vector& v);
  /// Block-diagonal compression of a full (matrix_dim x matrix_dim) matrix.
  static Element pinch(const Algebra& a, const Matrix& full);
  /// Classical element with the given diagonal entries.
  static Element diagonal(const Algebra& a, std::span<const Complex> entries);

  const Algebra& algebra() const { return algebra_; }
  const std::vector<Matrix>& blocks() const { return blocks_; }
  const Matrix& block(int x) const { return blocks_[static_cast<std::size_t>(x)]; }
  Matrix& block(int x) { return blocks_[static_cast<std::size_t>(x)]; }

  Vector vectorize() const;
  /// Block-diagonal embedding as a single matrix.
  Matrix dense() const;
  Element adjoint() const;
  /// Operator norm (largest over blocks).
  double norm() const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(Complex s);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, Complex s) { return a *= s; }
  friend Element operator*(Complex s, Element a) { return a *= s; }
  friend Element operator*(const Element& a, const Element& b);

 private:
  Algebra algebra_;
  std::vector<Matrix> blocks_;
};

/// Throws AlgebraMismatch unless a == b.
void require_same(const Algebra& a, const Algebra& b, const char* what);

Element tensor(const Element& a, const Element& b);
Element commutator(const Element& a, const Element& b);

Complex trace(const Element& a);
/// tr(a^dagger b).
Complex hs_inner(const Element& a, const Element& b);
/// Unitary conjugation v a v^dagger.
Element ad(const Element& v, const Element& a);
bool is_positive(const Element& a, double tol = kDefaultTol);
bool is_unitary(const Element& u, double tol = kDefaultTol);
bool approx_equal(const Element& a, const Element& b, double tol = kDefaultTol);

/// A positive-definite, unit-trace element with its blockwise spectral
/// decomposition cached. Construction below the faithfulness floor throws.
class FaithfulState {
 public:
  static constexpr double kDefaultFloor = 1e-12;

  explicit FaithfulState(Element element, double floor = kDefaultFloor, double tol = kDefaultTol);

  static FaithfulState maximally_mixed(const Algebra& a);
  /// Probability vector on C^n.
  static FaithfulState classical(std::span<const double> probabilities);
  /// diag(lambda) on M_n.
  static FaithfulState diagonal_matrix(std::span<const double> eigenvalues);

  const Element& element() const { return element_; }
  const Algebra& algebra() const { return element_.algebra(); }
  double floor() const { return floor_; }
  const RealVector& eigenvalues(int x) const { return eigenvalues_[static_cast<std::size_t>(x)]; }
  const Matrix& eigenvectors(int x) const { return eigenvectors_[static_cast<std::size_t>(x)]; }
  double min_eigenvalue() const;

  /// U diag(lambda^z) U^dagger per block.
  Element power(Complex z) const;
  Element log() const;

 private:
  Element element_;
  std::vector<RealVector> eigenvalues_;
  std::vector<Matrix> eigenvectors_;
  double floor_;
};

FaithfulState tensor(const FaithfulState& a, const FaithfulState& b);

inline Element element_power(const FaithfulState& s, Complex z) { return s.power(z); }

/// tr(a^dagger alpha^{-1/2} b alpha^{-1/2}).
Complex kms_inner(const FaithfulState& alpha, const Element& a, const Element& b);

}  // namespace retro
