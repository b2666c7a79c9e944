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

#include <array>
#include <string>

#include "retro/channel.hpp"

namespace retro {

/// Classical determinant-maximizing recovery. Among column-stochastic R with
///   R q = p, (R E) diag(p) symmetric, spec(R E) >= 0,
/// returns the R maximizing det(R E). With M = diag(p)^{-1/2} R E diag(p)^{1/2}
/// symmetric, the objective log det M is strictly concave in R whenever E is
/// invertible, so the maximizer is unique. A singular E makes every feasible
/// determinant vanish and the problem is reported infeasible.
struct SsResult {
  RealMatrix r;
  double determinant = 0.0;
  /// Strict concavity certificate (E invertible).
  bool unique = false;
  /// "closed_form", "permutation" or "interior_point".
  std::string method;
  /// Largest KKT residual of the final active-set solve (0 for exact paths).
  double kkt_residual = 0.0;
};

SsResult solve_surace_scandi(const RealVector& p, const RealMatrix& e);

/// Channel form. Throws Inapplicable for non-commutative or unequal
/// cardinalities, Infeasible when no admissible R has positive determinant.
Channel surace_scandi_classical(const FaithfulState& p, const Channel& e);

/// 2 x 2 closed form over any ordered field (double, rational types).
/// Writing R = [[a, b], [1 - a, 1 - b]], the constraints fix
/// a = (p0 - b q1) / q0 and det(R E) = det(E) (p0 - b) / q0, so the optimum is
/// the end of the admissible b-interval that maximizes this linear function.
/// Row-major result {R00, R01, R10, R11}.
template <typename Scalar>
std::array<Scalar, 4> surace_scandi_2x2(const std::array<Scalar, 2>& p, const std::array<Scalar, 4>& e) {
  const Scalar zero(0);
  const Scalar one(1);
  const Scalar q0 = e[0] * p[0] + e[1] * p[1];
  const Scalar q1 = e[2] * p[0] + e[3] * p[1];
  const Scalar det_e = e[0] * e[3] - e[1] * e[2];
  if (det_e == zero) throw Infeasible("singular 2x2 channel: every admissible recovery has zero determinant");
  // a in [0, 1]  <=>  (p0 - q0) / q1 <= b <= p0 / q1.
  Scalar b;
  if (det_e > zero) {
    b = (p[0] - q0) / q1;
    if (b < zero) b = zero;
  } else {
    b = p[0] / q1;
    if (b > one) b = one;
  }
  const Scalar a = (p[0] - b * q1) / q0;
  return {a, b, one - a, one - b};
}

}  // namespace retro
