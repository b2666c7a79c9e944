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

#include "retro/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace retro {

namespace {

constexpr double kMaxCondition = 1e10;

void check_shape(const Algebra& source, const Algebra& target, const Matrix& m) {
  if (m.rows() != target.total_dim() || m.cols() != source.total_dim())
    throw AlgebraMismatch("channel matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                          ", expected " + std::to_string(target.total_dim()) + "x" +
                          std::to_string(source.total_dim()));
}

// Vector index of entry (i, j) of block x.
int vec_index(const Algebra& a, int x, int i, int j) { return a.offset(x) + j * a.block_dim(x) + i; }

struct UnitIndex {
  int block;
  int row;
  int col;
};

std::vector<UnitIndex> unit_indices(const Algebra& a) {
  std::vector<UnitIndex> out;
  out.reserve(static_cast<std::size_t>(a.total_dim()));
  for (int x = 0; x < a.num_blocks(); ++x)
    for (int j = 0; j < a.block_dim(x); ++j)
      for (int i = 0; i < a.block_dim(x); ++i) out.push_back({x, i, j});
  return out;
}

// Superoperator of X -> [h, X].
Matrix commutator_superop(const Element& h) {
  const Algebra& a = h.algebra();
  const Channel left = Channel::from_function(a, a, [&](const Element& x) { return commutator(h, x); });
  return left.matrix();
}

}  // namespace

Channel::Channel(Algebra source, Algebra target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  check_shape(source_, target_, matrix_);
}

Channel::Channel(const Channel& other)
    : source_(other.source_), target_(other.target_), matrix_(other.matrix_), cptp_(other.cptp_.load()) {}

Channel::Channel(Channel&& other) noexcept
    : source_(std::move(other.source_)),
      target_(std::move(other.target_)),
      matrix_(std::move(other.matrix_)),
      cptp_(other.cptp_.load()) {}

Channel& Channel::operator=(const Channel& other) {
  if (this != &other) {
    source_ = other.source_;
    target_ = other.target_;
    matrix_ = other.matrix_;
    cptp_.store(other.cptp_.load());
  }
  return *this;
}

Channel& Channel::operator=(Channel&& other) noexcept {
  source_ = std::move(other.source_);
  target_ = std::move(other.target_);
  matrix_ = std::move(other.matrix_);
  cptp_.store(other.cptp_.load());
  return *this;
}

Channel Channel::identity(const Algebra& a) {
  Channel c(a, a, Matrix::Identity(a.total_dim(), a.total_dim()));
  c.cache_cptp(true);
  return c;
}

Channel Channel::ad(const Element& u) {
  const Element ud = u.adjoint();
  return from_function(u.algebra(), u.algebra(), [&](const Element& x) { return u * x * ud; });
}

Channel Channel::from_function(const Algebra& source, const Algebra& target,
                               const std::function<Element(const Element&)>& fn) {
  Matrix m(target.total_dim(), source.total_dim());
  int col = 0;
  for (const auto& u : unit_indices(source)) {
    const Element image = fn(Element::matrix_unit(source, u.block, u.row, u.col));
    require_same(image.algebra(), target, "from_function image");
    m.col(col++) = image.vectorize();
  }
  return Channel(source, target, std::move(m));
}

Channel Channel::from_kraus(const Algebra& source, const Algebra& target, const std::vector<Matrix>& kraus) {
  if (kraus.empty()) throw InvalidArgument("Kraus list is empty");
  for (const auto& k : kraus)
    if (k.rows() != target.matrix_dim() || k.cols() != source.matrix_dim())
      throw AlgebraMismatch("Kraus operator has the wrong shape");
  return from_function(source, target, [&](const Element& x) {
    const Matrix dx = x.dense();
    Matrix out = Matrix::Zero(target.matrix_dim(), target.matrix_dim());
    for (const auto& k : kraus) out += k * dx * k.adjoint();
    return Element::pinch(target, out);
  });
}

Channel Channel::from_stochastic(const RealMatrix& e) {
  if (e.rows() < 1 || e.cols() < 1) throw InvalidArgument("empty stochastic matrix");
  return Channel(Algebra::classical(static_cast<int>(e.cols())), Algebra::classical(static_cast<int>(e.rows())),
                 e.cast<Complex>());
}

Element Channel::apply(const Element& a) const {
  require_same(a.algebra(), source_, "channel apply");
  return Element::from_vector(target_, matrix_ * a.vectorize());
}

RealMatrix Channel::stochastic() const {
  if (!source_.is_commutative() || !target_.is_commutative())
    throw Inapplicable("stochastic matrix requested for a non-commutative channel");
  return matrix_.real();
}

Channel& Channel::operator+=(const Channel& other) {
  require_same(source_, other.source_, "channel sum source");
  require_same(target_, other.target_, "channel sum target");
  matrix_ += other.matrix_;
  cptp_.store(0);
  return *this;
}

Channel& Channel::operator*=(Complex s) {
  matrix_ *= s;
  cptp_.store(0);
  return *this;
}

Channel compose(const Channel& f, const Channel& e) {
  require_same(e.target(), f.source(), "compose");
  return Channel(e.source(), f.target(), f.matrix() * e.matrix());
}

Channel operator*(const Channel& f, const Channel& e) { return compose(f, e); }

std::vector<int> tensor_index_map(const Algebra& a, const Algebra& b) {
  std::vector<int> map(static_cast<std::size_t>(a.total_dim() * b.total_dim()));
  const Algebra ab = tensor(a, b);
  for (int x = 0; x < a.num_blocks(); ++x) {
    const int m = a.block_dim(x);
    for (int y = 0; y < b.num_blocks(); ++y) {
      const int n = b.block_dim(y);
      const int xy = x * b.num_blocks() + y;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
              const int ia = vec_index(a, x, i, j);
              const int ib = vec_index(b, y, k, l);
              map[static_cast<std::size_t>(ia * b.total_dim() + ib)] = vec_index(ab, xy, i * n + k, j * n + l);
            }
    }
  }
  return map;
}

Channel tensor(const Channel& e, const Channel& e2) {
  const Algebra src = tensor(e.source(), e2.source());
  const Algebra tgt = tensor(e.target(), e2.target());
  const auto ps = tensor_index_map(e.source(), e2.source());
  const auto pt = tensor_index_map(e.target(), e2.target());
  const Matrix k = kron(e.matrix(), e2.matrix());
  Matrix m(tgt.total_dim(), src.total_dim());
  for (Eigen::Index r = 0; r < k.rows(); ++r)
    for (Eigen::Index c = 0; c < k.cols(); ++c)
      m(pt[static_cast<std::size_t>(r)], ps[static_cast<std::size_t>(c)]) = k(r, c);
  return Channel(src, tgt, std::move(m));
}

Channel hs_adjoint(const Channel& e) { return Channel(e.target(), e.source(), e.matrix().adjoint()); }

std::vector<Matrix> choi_blocks(const Channel& e) {
  std::vector<Matrix> out;
  const Algebra& s = e.source();
  const int n_out = e.target().matrix_dim();
  for (int x = 0; x < s.num_blocks(); ++x) {
    const int m = s.block_dim(x);
    Matrix c = Matrix::Zero(m * n_out, m * n_out);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Matrix unit = Matrix::Zero(m, m);
        unit(i, j) = 1.0;
        c += kron(unit, e.apply(Element::matrix_unit(s, x, i, j)).dense());
      }
    out.push_back(std::move(c));
  }
  return out;
}

CptpReport check_cptp(const Channel& e, double tol) {
  CptpReport r;
  r.min_choi_eigenvalue = std::numeric_limits<double>::infinity();
  bool cp = true;
  const auto blocks = choi_blocks(e);
  for (std::size_t x = 0; x < blocks.size(); ++x) {
    const Matrix& c = blocks[x];
    const double scale = 1.0 + operator_norm(c);
    const double herm = operator_norm(c - c.adjoint());
    const double lam = min_eigenvalue(c);
    r.min_choi_eigenvalue = std::min(r.min_choi_eigenvalue, lam);
    if (herm > tol * scale || lam < -tol * scale) {
      cp = false;
      if (r.diagnostic.empty())
        r.diagnostic = "Choi block " + std::to_string(x) + " has eigenvalue " + std::to_string(lam);
    }
  }
  // Trace preservation: the row functional tr(.) composed with e equals tr(.).
  const Algebra& s = e.source();
  const Algebra& t = e.target();
  Vector tr_t = Element::identity(t).vectorize();
  Vector tr_s = Element::identity(s).vectorize();
  r.trace_error = (e.matrix().transpose() * tr_t - tr_s).cwiseAbs().maxCoeff();
  const bool tp = r.trace_error <= tol;
  if (!tp && r.diagnostic.empty()) r.diagnostic = "trace not preserved, error " + std::to_string(r.trace_error);
  r.ok = cp && tp;
  return r;
}

bool is_cptp(const Channel& e, double tol) {
  const bool cacheable = tol == kDefaultTol;
  if (cacheable && e.cptp_status() != Channel::CptpStatus::kUnknown)
    return e.cptp_status() == Channel::CptpStatus::kVerified;
  const bool ok = check_cptp(e, tol).ok;
  if (cacheable) e.cache_cptp(ok);
  return ok;
}

FaithfulState predict(const Channel& e, const FaithfulState& alpha) {
  require_same(alpha.algebra(), e.source(), "predict");
  return FaithfulState(e.apply(alpha.element()));
}

bool is_covariant(const Channel& e, const FaithfulState& alpha, double tol) {
  const FaithfulState beta = predict(e, alpha);
  const Element la = alpha.log();
  const Element lb = beta.log();
  const Matrix lhs = e.matrix() * commutator_superop(la);
  const Matrix rhs = commutator_superop(lb) * e.matrix();
  return operator_norm(lhs - rhs) <= tol * (1.0 + la.norm() + lb.norm());
}

bool is_star_isomorphism(const Channel& e, double tol) {
  const Algebra& s = e.source();
  const Algebra& t = e.target();
  if (s.total_dim() != t.total_dim() || s.matrix_dim() != t.matrix_dim()) return false;
  Eigen::JacobiSVD<Matrix> svd(e.matrix());
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 0.0 || sv(0) / sv(sv.size() - 1) > kMaxCondition) return false;
  const auto units = unit_indices(s);
  std::vector<Element> images;
  for (const auto& u : units) images.push_back(e.apply(Element::matrix_unit(s, u.block, u.row, u.col)));
  for (std::size_t a = 0; a < units.size(); ++a) {
    const auto& ua = units[a];
    const Element adj = e.apply(Element::matrix_unit(s, ua.block, ua.col, ua.row));
    if ((adj - images[a].adjoint()).norm() > tol) return false;
    for (std::size_t b = 0; b < units.size(); ++b) {
      const auto& ub = units[b];
      Element prod = Element::zero(t);
      if (ua.block == ub.block && ua.col == ub.row) prod = e.apply(Element::matrix_unit(s, ua.block, ua.row, ub.col));
      if ((prod - images[a] * images[b]).norm() > tol) return false;
    }
  }
  return true;
}

Channel invert_iso(const Channel& e, double tol) {
  if (!is_star_isomorphism(e, tol)) throw Inapplicable("channel is not a *-isomorphism");
  Channel inv(e.target(), e.source(), e.matrix().inverse());
  inv.cache_cptp(true);
  return inv;
}

double deviation(const Channel& a, const Channel& b) {
  require_same(a.source(), b.source(), "deviation source");
  require_same(a.target(), b.target(), "deviation target");
  return operator_norm(a.matrix() - b.matrix()) / a.source().matrix_dim();
}

bool approx_equal(const Channel& a, const Channel& b, double tol) {
  return a.source() == b.source() && a.target() == b.target() && deviation(a, b) <= tol;
}

// ---------------------------------------------------------------------------

Element pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return Element(Algebra::matrix(2), {m});
}

Element pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return Element(Algebra::matrix(2), {m});
}

Element pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return Element(Algebra::matrix(2), {m});
}

Element e01() { return Element::matrix_unit(Algebra::matrix(2), 0, 0, 1); }

Channel bit_flip(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("bit-flip probability outside [0, 1]");
  const Algebra a = Algebra::matrix(2);
  Channel c = Channel::identity(a) * Complex(1.0 - p) + Channel::ad(pauli_x()) * Complex(p);
  c.cache_cptp(true);
  return c;
}

Channel transpose_map(int n) {
  const Algebra a = Algebra::matrix(n);
  return Channel::from_function(a, a, [](const Element& x) {
    return Element(x.algebra(), {x.block(0).transpose()});
  });
}

Channel permutation_channel(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> seen(perm);
  std::sort(seen.begin(), seen.end());
  std::vector<int> expect(static_cast<std::size_t>(n));
  std::iota(expect.begin(), expect.end(), 0);
  if (seen != expect) throw InvalidArgument("not a permutation");
  RealMatrix e = RealMatrix::Zero(n, n);
  for (int x = 0; x < n; ++x) e(perm[static_cast<std::size_t>(x)], x) = 1.0;
  return Channel::from_stochastic(e);
}

}  // namespace retro
