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

#include <cstdint>
#include <random>

#include "retro/channel.hpp"

namespace retro {

/// Seeded, splittable random source. Child streams are derived by hashing
/// (seed, stream id), so draws never depend on call order across streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  Rng split(std::uint64_t stream) const;
  std::uint64_t seed() const { return seed_; }

  double uniform(double lo = 0.0, double hi = 1.0);
  double normal();
  /// Standard complex Gaussian, E|z|^2 = 1.
  Complex complex_normal();
  Matrix gaussian_matrix(int rows, int cols);
  /// Haar-distributed isometry (rows >= cols) from the phase-corrected QR
  /// of a complex Gaussian matrix.
  Matrix isometry(int rows, int cols);
  Matrix unitary(int n) { return isometry(n, n); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Per block: G G^dagger, then mixed with floor * I so that every
/// eigenvalue is at least floor. Throws InvalidArgument unless
/// 0 < floor < 1 / matrix_dim.
FaithfulState random_faithful_state(const Algebra& a, double floor, std::uint64_t seed);

/// Blockwise Stinespring construction: each source block x is mapped by a
/// random isometry into C^{target.matrix_dim} (x) C^{env}, the environment is
/// traced out and the result pinched onto the target blocks. env_dim is
/// raised where needed so that the isometry exists.
Channel random_channel(const Algebra& source, const Algebra& target, int env_dim, std::uint64_t seed);

/// Block-diagonal Haar unitary.
Element random_unitary(const Algebra& a, std::uint64_t seed);

/// Random *-automorphism: a permutation of equal-sized blocks followed by a
/// blockwise unitary conjugation. On C^n this is a permutation channel.
Channel random_isomorphism(const Algebra& a, std::uint64_t seed);

/// sum_k w_k Ad_{U_k} with random weights and unitaries; unital, so the
/// maximally mixed state is mapped to itself.
Channel random_mixed_unitary(const Algebra& a, int terms, std::uint64_t seed);

}  // namespace retro
