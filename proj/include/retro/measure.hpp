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

#include <vector>

#include "retro/matrix_functions.hpp"

namespace retro {

struct WeightedPoint {
  double t;
  double weight;
};

/// Probability measure on the real line used to average rotated Petz maps.
///
/// The smooth measure has density pi / (cosh(2 pi t) + 1). It is discretized
/// by the substitution t = kJrswwScale * sinh(u) followed by the trapezoid
/// rule in u on |t| <= kJrswwCutoff. The truncated tail mass is about 5e-14;
/// at 64 nodes the characteristic function is accurate to ~1e-9 for
/// |w| <= 8 pi.
class Measure {
 public:
  enum class Kind { kDirac, kDiscrete, kJrsww };

  static constexpr int kDefaultJrswwNodes = 64;
  static constexpr double kJrswwCutoff = 5.0;
  static constexpr double kJrswwScale = 1.3;

  static Measure dirac(double t);
  /// Weights must be positive and sum to 1 within 1e-12.
  static Measure discrete(std::vector<WeightedPoint> points);
  static Measure jrsww(int nodes = kDefaultJrswwNodes);

  Kind kind() const { return kind_; }
  int jrsww_nodes() const { return nodes_; }

  /// Points and weights actually summed when averaging. Exact for Dirac and
  /// discrete measures, the quadrature rule for the smooth one.
  const std::vector<WeightedPoint>& nodes() const { return points_; }
  double mass() const;

  /// Exact characteristic function: integral of exp(i w t) d mu(t).
  Complex characteristic(double w) const;
  /// Characteristic function of the discretization (sum over nodes()).
  Complex discrete_characteristic(double w) const;

 private:
  Measure(Kind kind, std::vector<WeightedPoint> points, int nodes)
      : kind_(kind), points_(std::move(points)), nodes_(nodes) {}

  Kind kind_;
  std::vector<WeightedPoint> points_;
  int nodes_ = 0;
};

double jrsww_density(double t);
/// Closed form of the characteristic function of the smooth measure:
/// (w / 2) / sinh(w / 2), equal to 1 at w = 0.
double jrsww_characteristic(double w);

/// Convolution of two discrete (or Dirac) measures; equal points merged.
Measure convolve(const Measure& mu, const Measure& nu);

}  // namespace retro
