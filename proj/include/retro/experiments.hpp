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

#include <string>
#include <vector>

#include "retro/retrodiction.hpp"

namespace retro {

/// A computed quantity next to its closed-form value. Scalars are stored as
/// 1 x 1 matrices.
struct GoldenResult {
  std::string name;
  Matrix computed;
  Matrix expected;
  double tolerance;
  std::string provenance;

  /// Largest entrywise modulus of computed - expected.
  double deviation() const;
  bool pass() const { return deviation() <= tolerance; }
};

// Instance constants, computed from exponentials rather than decimals.

/// Prior of the bit-flip composition witness, e^{2 pi} / (1 + e^{2 pi}).
double bitflip_theta();
/// Bit-flip weight tanh(pi/2) / (2 sinh pi), which sends bitflip_theta() to
/// e^{pi} / (1 + e^{pi}).
double bitflip_p();
/// Involutivity instance: theta = 1 / (1 + e^{pi (sqrt 2 + 1) / 2}).
double involution_theta();
/// Involutivity instance: p = sinh(pi/2) / (sinh(pi/2) + sinh(pi / sqrt 2)).
double involution_p();

/// diag(theta, 1 - theta) on M_2.
FaithfulState qubit_diagonal(double theta);

/// Stochastic matrices of the classical determinant-maximization
/// counterexample: prior (1/2, 1/2), first map E, second map F.
RealMatrix counterexample_first();
RealMatrix counterexample_second();

/// Convex symmetric rotated maps on bit-flip channels: composition and
/// tensor witnesses against compositionality and tensoriality.
std::vector<GoldenResult> bitflip_rotated_convex();
/// The same witnesses for the smooth (JRSWW) average, by quadrature and by
/// the exact characteristic function, against hyperbolic closed forms.
std::vector<GoldenResult> jrsww_bitflip(int nodes = Measure::kDefaultJrswwNodes);
/// Classical determinant-maximizing recoveries and their failed composition,
/// in exact rational arithmetic and in floating point.
std::vector<GoldenResult> surace_scandi_counterexample();
/// Rotated Petz maps are involutive only at t = 0 on the bit-flip instance
/// with incommensurate modular phases. grid_step controls the t-scan on
/// [-3, 3].
std::vector<GoldenResult> involution_uniqueness(double grid_step = 0.01);

/// Returns the results of the experiment named by a CLI token
/// (appendix-b, appendix-c, appendix-d, involution). Throws InvalidArgument.
std::vector<GoldenResult> run_experiment(const std::string& token);
const std::vector<std::string>& experiment_tokens();

std::string format_results(const std::vector<GoldenResult>& results);

}  // namespace retro
