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

#include "retro/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace retro {

Algebra::Algebra(std::vector<int> block_dims) : dims_(std::move(block_dims)) {
  if (dims_.empty()) throw InvalidArgument("algebra needs at least one block");
  offsets_.reserve(dims_.size());
  for (int m : dims_) {
    if (m < 1) throw InvalidArgument("block dimensions must be positive");
    offsets_.push_back(total_dim_);
    total_dim_ += m * m;
    matrix_dim_ += m;
  }
}

Algebra Algebra::classical(int n) {
  if (n < 1) throw InvalidArgument("classical algebra needs n >= 1");
  return Algebra(std::vector<int>(static_cast<std::size_t>(n), 1));
}

bool Algebra::is_commutative() const {
  return std::all_of(dims_.begin(), dims_.end(), [](int m) { return m == 1; });
}

Algebra tensor(const Algebra& a, const Algebra& b) {
  std::vector<int> dims;
  dims.reserve(a.block_dims().size() * b.block_dims().size());
  for (int m : a.block_dims())
    for (int n : b.block_dims()) dims.push_back(m * n);
  return Algebra(std::move(dims));
}

std::string to_string(const Algebra& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.block_dims().size(); ++i) os << (i ? "," : "") << a.block_dims()[i];
  os << ']';
  return os.str();
}

void require_same(const Algebra& a, const Algebra& b, const char* what) {
  if (!(a == b))
    throw AlgebraMismatch(std::string(what) + ": algebra " + to_string(a) + " vs " + to_string(b));
}

// ---------------------------------------------------------------------------

Element::Element(Algebra algebra, std::vector<Matrix> blocks)
    : algebra_(std::move(algebra)), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != algebra_.num_blocks())
    throw AlgebraMismatch("element has " + std::to_string(blocks_.size()) + " blocks, algebra " +
                          to_string(algebra_));
  for (int x = 0; x < algebra_.num_blocks(); ++x) {
    const auto m = algebra_.block_dim(x);
    if (block(x).rows() != m || block(x).cols() != m)
      throw AlgebraMismatch("block " + std::to_string(x) + " has the wrong shape for " +
                            to_string(algebra_));
  }
}

Element Element::zero(const Algebra& a) {
  std::vector<Matrix> blocks;
  for (int m : a.block_dims()) blocks.push_back(Matrix::Zero(m, m));
  return Element(a, std::move(blocks));
}

Element Element::identity(const Algebra& a) {
  std::vector<Matrix> blocks;
  for (int m : a.block_dims()) blocks.push_back(Matrix::Identity(m, m));
  return Element(a, std::move(blocks));
}

Element Element::matrix_unit(const Algebra& a, int x, int i, int j) {
  Element e = zero(a);
  e.block(x)(i, j) = 1.0;
  return e;
}

Element Element::from_vector(const Algebra& a, const Vector& v) {
  if (v.size() != a.total_dim())
    throw AlgebraMismatch("vector length " + std::to_string(v.size()) + " does not match " +
                          to_string(a));
  std::vector<Matrix> blocks;
  for (int x = 0; x < a.num_blocks(); ++x) {
    const int m = a.block_dim(x);
    blocks.push_back(Eigen::Map<const Matrix>(v.data() + a.offset(x), m, m));
  }
  return Element(a, std::move(blocks));
}

Element Element::pinch(const Algebra& a, const Matrix& full) {
  if (full.rows() != a.matrix_dim() || full.cols() != a.matrix_dim())
    throw AlgebraMismatch("full matrix does not match " + to_string(a));
  std::vector<Matrix> blocks;
  int start = 0;
  for (int m : a.block_dims()) {
    blocks.push_back(full.block(start, start, m, m));
    start += m;
  }
  return Element(a, std::move(blocks));
}

Element Element::diagonal(const Algebra& a, std::span<const Complex> entries) {
  if (static_cast<int>(entries.size()) != a.matrix_dim())
    throw AlgebraMismatch("diagonal has the wrong length for " + to_string(a));
  Element e = zero(a);
  int k = 0;
  for (int x = 0; x < a.num_blocks(); ++x)
    for (int i = 0; i < a.block_dim(x); ++i) e.block(x)(i, i) = entries[static_cast<std::size_t>(k++)];
  return e;
}

Vector Element::vectorize() const {
  Vector v(algebra_.total_dim());
  for (int x = 0; x < algebra_.num_blocks(); ++x) {
    const int m = algebra_.block_dim(x);
    v.segment(algebra_.offset(x), m * m) = Eigen::Map<const Vector>(block(x).data(), m * m);
  }
  return v;
}

Matrix Element::dense() const {
  const int n = algebra_.matrix_dim();
  Matrix out = Matrix::Zero(n, n);
  int start = 0;
  for (const auto& b : blocks_) {
    out.block(start, start, b.rows(), b.cols()) = b;
    start += static_cast<int>(b.rows());
  }
  return out;
}

Element Element::adjoint() const {
  std::vector<Matrix> blocks;
  for (const auto& b : blocks_) blocks.push_back(b.adjoint());
  return Element(algebra_, std::move(blocks));
}

double Element::norm() const {
  double n = 0.0;
  for (const auto& b : blocks_) n = std::max(n, operator_norm(b));
  return n;
}

Element& Element::operator+=(const Element& other) {
  require_same(algebra_, other.algebra_, "element sum");
  for (std::size_t x = 0; x < blocks_.size(); ++x) blocks_[x] += other.blocks_[x];
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same(algebra_, other.algebra_, "element difference");
  for (std::size_t x = 0; x < blocks_.size(); ++x) blocks_[x] -= other.blocks_[x];
  return *this;
}

Element& Element::operator*=(Complex s) {
  for (auto& b : blocks_) b *= s;
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  require_same(a.algebra(), b.algebra(), "element product");
  std::vector<Matrix> blocks;
  for (int x = 0; x < a.algebra().num_blocks(); ++x) blocks.push_back(a.block(x) * b.block(x));
  return Element(a.algebra(), std::move(blocks));
}

Element tensor(const Element& a, const Element& b) {
  std::vector<Matrix> blocks;
  for (const auto& ax : a.blocks())
    for (const auto& by : b.blocks()) blocks.push_back(kron(ax, by));
  return Element(tensor(a.algebra(), b.algebra()), std::move(blocks));
}

Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

Complex trace(const Element& a) {
  Complex t = 0.0;
  for (const auto& b : a.blocks()) t += b.trace();
  return t;
}

Complex hs_inner(const Element& a, const Element& b) {
  require_same(a.algebra(), b.algebra(), "hs_inner");
  return a.vectorize().dot(b.vectorize());
}

Element ad(const Element& v, const Element& a) {
  require_same(v.algebra(), a.algebra(), "ad");
  return v * a * v.adjoint();
}

bool is_positive(const Element& a, double tol) {
  for (const auto& b : a.blocks()) {
    if (operator_norm(b - b.adjoint()) > tol) return false;
    if (min_eigenvalue(b) < -tol) return false;
  }
  return true;
}

bool is_unitary(const Element& u, double tol) {
  return std::all_of(u.blocks().begin(), u.blocks().end(),
                     [tol](const Matrix& b) { return retro::is_unitary(b, tol); });
}

bool approx_equal(const Element& a, const Element& b, double tol) {
  return a.algebra() == b.algebra() && (a - b).norm() <= tol;
}

// ---------------------------------------------------------------------------

FaithfulState::FaithfulState(Element element, double floor, double tol)
    : element_(std::move(element)), floor_(floor) {
  if (!(floor > 0.0)) throw InvalidArgument("faithfulness floor must be positive");
  for (const auto& b : element_.blocks())
    if (operator_norm(b - b.adjoint()) > tol) throw NotFaithful("state is not Hermitian");
  const Complex tr = trace(element_);
  if (std::abs(tr - 1.0) > tol)
    throw NotFaithful("state has trace " + std::to_string(tr.real()) + ", expected 1");
  for (int x = 0; x < element_.algebra().num_blocks(); ++x) {
    Matrix& b = element_.block(x);
    b = hermitian_part(b);
    Eigen::SelfAdjointEigenSolver<Matrix> es(b);
    if (es.info() != Eigen::Success) throw NotFaithful("eigendecomposition failed");
    if (es.eigenvalues()(0) < floor)
      throw NotFaithful("state has eigenvalue " + std::to_string(es.eigenvalues()(0)) +
                        " below the faithfulness floor " + std::to_string(floor));
    eigenvalues_.push_back(es.eigenvalues());
    eigenvectors_.push_back(es.eigenvectors());
  }
}

FaithfulState FaithfulState::maximally_mixed(const Algebra& a) {
  return FaithfulState(Element::identity(a) * Complex(1.0 / a.matrix_dim()));
}

FaithfulState FaithfulState::classical(std::span<const double> probabilities) {
  const Algebra a = Algebra::classical(static_cast<int>(probabilities.size()));
  std::vector<Complex> entries(probabilities.begin(), probabilities.end());
  return FaithfulState(Element::diagonal(a, entries));
}

FaithfulState FaithfulState::diagonal_matrix(std::span<const double> eigenvalues) {
  const int n = static_cast<int>(eigenvalues.size());
  if (n < 1) throw InvalidArgument("diagonal state needs at least one eigenvalue");
  Matrix d = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = eigenvalues[static_cast<std::size_t>(i)];
  return FaithfulState(Element(Algebra::matrix(n), {d}));
}

double FaithfulState::min_eigenvalue() const {
  double m = eigenvalues_.front()(0);
  for (const auto& ev : eigenvalues_) m = std::min(m, ev(0));
  return m;
}

Element FaithfulState::power(Complex z) const {
  std::vector<Matrix> blocks;
  for (std::size_t x = 0; x < eigenvalues_.size(); ++x) {
    const auto& lam = eigenvalues_[x];
    Vector d(lam.size());
    for (Eigen::Index i = 0; i < lam.size(); ++i) d(i) = std::exp(z * std::log(lam(i)));
    blocks.push_back(eigenvectors_[x] * d.asDiagonal() * eigenvectors_[x].adjoint());
  }
  return Element(algebra(), std::move(blocks));
}

Element FaithfulState::log() const {
  std::vector<Matrix> blocks;
  for (std::size_t x = 0; x < eigenvalues_.size(); ++x) {
    Vector d = eigenvalues_[x].array().log().cast<Complex>();
    blocks.push_back(eigenvectors_[x] * d.asDiagonal() * eigenvectors_[x].adjoint());
  }
  return Element(algebra(), std::move(blocks));
}

FaithfulState tensor(const FaithfulState& a, const FaithfulState& b) {
  return FaithfulState(tensor(a.element(), b.element()), std::min(a.floor(), b.floor()) * 1e-3);
}

Complex kms_inner(const FaithfulState& alpha, const Element& a, const Element& b) {
  const Element s = alpha.power(-0.5);
  return trace(a.adjoint() * s * b * s);
}

}  // namespace retro
