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

#include "retro/measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "retro/errors.hpp"

namespace retro {

using std::numbers::pi;

Measure Measure::dirac(double t) { return Measure(Kind::kDirac, {{t, 1.0}}, 0); }

Measure Measure::discrete(std::vector<WeightedPoint> points) {
  if (points.empty()) throw InvalidArgument("discrete measure needs at least one point");
  double total = 0.0;
  for (const auto& p : points) {
    if (!(p.weight > 0.0)) throw InvalidArgument("discrete measure weights must be positive");
    if (!std::isfinite(p.t)) throw InvalidArgument("discrete measure point is not finite");
    total += p.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) throw InvalidArgument("discrete measure weights do not sum to 1");
  return Measure(Kind::kDiscrete, std::move(points), 0);
}

Measure Measure::jrsww(int nodes) {
  if (nodes < 3) throw InvalidArgument("smooth measure needs at least 3 quadrature nodes");
  std::vector<WeightedPoint> pts;
  pts.reserve(static_cast<std::size_t>(nodes));
  // t = c sinh(u) with a trapezoid rule in u; the substitution turns the
  // exponential tail into a double-exponential one.
  const double c = kJrswwScale;
  const double u_max = std::asinh(kJrswwCutoff / c);
  const double h = 2.0 * u_max / (nodes - 1);
  for (int k = 0; k < nodes; ++k) {
    const double u = -u_max + k * h;
    const double t = c * std::sinh(u);
    const double end = (k == 0 || k == nodes - 1) ? 0.5 : 1.0;
    pts.push_back({t, end * h * c * std::cosh(u) * jrsww_density(t)});
  }
  return Measure(Kind::kJrsww, std::move(pts), nodes);
}

double Measure::mass() const {
  double m = 0.0;
  for (const auto& p : points_) m += p.weight;
  return m;
}

Complex Measure::characteristic(double w) const {
  if (kind_ == Kind::kJrsww) return jrsww_characteristic(w);
  return discrete_characteristic(w);
}

Complex Measure::discrete_characteristic(double w) const {
  Complex s = 0.0;
  for (const auto& p : points_) s += p.weight * std::exp(Complex(0.0, w * p.t));
  return s;
}

double jrsww_density(double t) { return pi / (std::cosh(2.0 * pi * t) + 1.0); }

double jrsww_characteristic(double w) {
  const double h = 0.5 * w;
  if (std::abs(h) < 1e-8) return 1.0 - h * h / 6.0;
  return h / std::sinh(h);
}

Measure convolve(const Measure& mu, const Measure& nu) {
  if (mu.kind() == Measure::Kind::kJrsww || nu.kind() == Measure::Kind::kJrsww)
    throw InvalidArgument("convolution is only implemented for discrete measures");
  std::map<double, double> merged;
  for (const auto& a : mu.nodes())
    for (const auto& b : nu.nodes()) merged[a.t + b.t] += a.weight * b.weight;
  std::vector<WeightedPoint> pts;
  for (const auto& [t, w] : merged) pts.push_back({t, w});
  double total = 0.0;
  for (const auto& p : pts) total += p.weight;
  for (auto& p : pts) p.weight /= total;
  return Measure::discrete(std::move(pts));
}

}  // namespace retro
