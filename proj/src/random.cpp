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

#include "retro/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace retro {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

Rng Rng::split(std::uint64_t stream) const { return Rng(mix(seed_ ^ mix(stream + 0x632be59bd9b4e019ULL))); }

double Rng::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

double Rng::normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) / std::sqrt(2.0);
}

Matrix Rng::gaussian_matrix(int rows, int cols) {
  Matrix g(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) g(i, j) = complex_normal();
  return g;
}

Matrix Rng::isometry(int rows, int cols) {
  if (rows < cols) throw InvalidArgument("isometry needs rows >= cols");
  const Matrix g = gaussian_matrix(rows, cols);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
  const Matrix r = qr.matrixQR().topLeftCorner(cols, cols);
  for (int k = 0; k < cols; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

FaithfulState random_faithful_state(const Algebra& a, double floor, std::uint64_t seed) {
  const int d = a.matrix_dim();
  if (!(floor > 0.0) || !(floor * d < 1.0)) throw InvalidArgument("faithfulness floor infeasible for algebra");
  Rng rng(seed);
  std::vector<Matrix> blocks;
  double total = 0.0;
  for (int m : a.block_dims()) {
    const Matrix g = rng.gaussian_matrix(m, m);
    Matrix p = g * g.adjoint();
    total += p.trace().real();
    blocks.push_back(std::move(p));
  }
  const double scale = (1.0 - d * floor) / total;
  for (auto& b : blocks) {
    b = hermitian_part(Matrix(b * scale));
    b += floor * Matrix::Identity(b.rows(), b.cols());
  }
  return FaithfulState(Element(a, std::move(blocks)), floor * 0.5);
}

Channel random_channel(const Algebra& source, const Algebra& target, int env_dim, std::uint64_t seed) {
  if (env_dim < 1) throw InvalidArgument("environment dimension must be >= 1");
  const int n = target.matrix_dim();
  Rng rng(seed);
  std::vector<Matrix> isometries;
  std::vector<int> envs;
  for (int x = 0; x < source.num_blocks(); ++x) {
    const int m = source.block_dim(x);
    int env = env_dim;
    while (n * env < m) ++env;
    isometries.push_back(rng.split(static_cast<std::uint64_t>(x)).isometry(n * env, m));
    envs.push_back(env);
  }
  Channel c = Channel::from_function(source, target, [&](const Element& unit) {
    int x = 0;
    while (unit.block(x).cwiseAbs().maxCoeff() == 0.0) ++x;
    const auto ux = static_cast<std::size_t>(x);
    const Matrix& v = isometries[ux];
    const int env = envs[ux];
    const Matrix big = v * unit.block(x) * v.adjoint();
    // Row index of C^n (x) C^env is i * env + k; trace over k.
    Matrix reduced = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < env; ++k) reduced(i, j) += big(i * env + k, j * env + k);
    return Element::pinch(target, reduced);
  });
  return c;
}

Element random_unitary(const Algebra& a, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Matrix> blocks;
  for (int m : a.block_dims()) blocks.push_back(rng.unitary(m));
  return Element(a, std::move(blocks));
}

Channel random_isomorphism(const Algebra& a, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> perm(static_cast<std::size_t>(a.num_blocks()));
  std::iota(perm.begin(), perm.end(), 0);
  // Fisher-Yates restricted to blocks of equal dimension.
  for (int x = a.num_blocks() - 1; x > 0; --x) {
    std::vector<int> same;
    for (int y = 0; y <= x; ++y)
      if (a.block_dim(y) == a.block_dim(x)) same.push_back(y);
    const auto k = static_cast<std::size_t>(rng.uniform(0.0, static_cast<double>(same.size())));
    std::swap(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(same[std::min(k, same.size() - 1)])]);
  }
  const Element u = random_unitary(a, rng.split(1).seed());
  Channel c = Channel::from_function(a, a, [&](const Element& x) {
    Element out = Element::zero(a);
    for (int b = 0; b < a.num_blocks(); ++b) {
      const int to = perm[static_cast<std::size_t>(b)];
      out.block(to) = u.block(to) * x.block(b) * u.block(to).adjoint();
    }
    return out;
  });
  c.cache_cptp(true);
  return c;
}

Channel random_mixed_unitary(const Algebra& a, int terms, std::uint64_t seed) {
  if (terms < 1) throw InvalidArgument("mixed-unitary channel needs at least one term");
  Rng rng(seed);
  std::vector<double> w(static_cast<std::size_t>(terms));
  for (auto& x : w) x = rng.uniform(0.1, 1.0);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  Channel c = Channel::ad(random_unitary(a, rng.split(0).seed())) * Complex(w[0] / total);
  for (int k = 1; k < terms; ++k)
    c += Channel::ad(random_unitary(a, rng.split(static_cast<std::uint64_t>(k)).seed())) *
         Complex(w[static_cast<std::size_t>(k)] / total);
  return c;
}

}  // namespace retro
