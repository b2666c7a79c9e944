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

#include <concepts>
#include <functional>
#include <type_traits>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "retro/channel.hpp"
#include "retro/measure.hpp"

namespace retro {

// ---------------------------------------------------------------------------
// Individual recovery maps. Each returns a channel e.target -> e.source.

/// Ad_{alpha^{1/2}} o e* o Ad_{beta^{-1/2}} with beta = e(alpha).
/// Throws NotCptp if e is not CPTP and NotFaithful if e(alpha) is not faithful.
Channel petz(const FaithfulState& alpha, const Channel& e);

/// Ad_{alpha^{1/2 - it}} o e* o Ad_{beta^{-1/2 + it}}.
Channel rotated_petz(const FaithfulState& alpha, const Channel& e, double t);

/// Petz map with the modular phase multiplied entrywise by phi(w), in the
/// eigenbases of alpha and beta. The frequency of the matrix unit pairing
/// |b_l><b_m| with |a_j><a_k| is w = (ln b_l - ln b_m) - (ln a_j - ln a_k);
/// phi = 1 gives petz, phi(w) = exp(i w t) gives rotated_petz.
Channel modular_schur_petz(const FaithfulState& alpha, const Channel& e,
                           const std::function<Complex(double)>& phi);

/// Sum of rotated maps over the measure's nodes (the quadrature rule for the
/// smooth measure).
Channel averaged_petz(const FaithfulState& alpha, const Channel& e, const Measure& mu);

/// Same average using the measure's exact characteristic function.
Channel averaged_petz_exact(const FaithfulState& alpha, const Channel& e, const Measure& mu);

/// Ad_{u_alpha^dagger} o petz o Ad_{u_beta}. Throws InvalidArgument unless
/// both unitaries commute with their states.
Channel sth(const FaithfulState& alpha, const Channel& e, const Element& u_alpha, const Element& u_beta,
            double tol = kDefaultTol);

/// B -> tr(B) alpha.
Channel discard_prepare(const FaithfulState& alpha, const Channel& e);

/// Classical Bayes inverse: Ebar(x, y) = E(y, x) p_x / q_y.
/// Throws Inapplicable on non-commutative algebras.
Channel bayes_inverse(const FaithfulState& p, const Channel& e);

// ---------------------------------------------------------------------------
// Strategies.

/// Per-state unitary choice for the STH map. A state matching one of the
/// explicit entries (within match_tol) gets the stored unitary; any other
/// state alpha gets alpha^{i g} with g = gain * Re alpha[0](0, 0).
struct UnitaryAssignment {
  double gain = 2.0;
  std::vector<std::pair<Element, Element>> entries;
  double match_tol = 1e-9;

  Element unitary_for(const FaithfulState& s) const;
};

struct Petz {};
struct RotatedPetz {
  double t = 0.0;
};
struct AveragedPetz {
  Measure measure;
};
struct Sth {
  UnitaryAssignment unitaries;
};
struct DiscardPrepare {};
struct Bayes {};
struct SuraceScandi {};
/// A user-supplied rule, used to exercise the axiom harness.
struct CustomStrategy {
  std::string name;
  std::function<Channel(const FaithfulState&, const Channel&)> fn;
};

class Strategy;

struct ConvexTerm;
struct Convex {
  std::vector<ConvexTerm> terms;
};

class Strategy {
 public:
  using Variant =
      std::variant<Petz, RotatedPetz, AveragedPetz, Sth, DiscardPrepare, Bayes, SuraceScandi, Convex, CustomStrategy>;

  template <typename T>
    requires(!std::same_as<std::remove_cvref_t<T>, Strategy> && std::constructible_from<Variant, T>)
  Strategy(T&& v) : v_(std::forward<T>(v)) {}  // NOLINT(google-explicit-constructor)

  static Strategy petz() { return Petz{}; }
  static Strategy rotated(double t) { return RotatedPetz{t}; }
  static Strategy averaged(Measure mu) { return AveragedPetz{std::move(mu)}; }
  static Strategy jrsww(int nodes = Measure::kDefaultJrswwNodes) { return AveragedPetz{Measure::jrsww(nodes)}; }
  static Strategy sth(UnitaryAssignment u = {}) { return Sth{std::move(u)}; }
  static Strategy discard_prepare() { return DiscardPrepare{}; }
  static Strategy bayes() { return Bayes{}; }
  static Strategy surace_scandi() { return SuraceScandi{}; }
  /// Weights positive and summing to 1 within 1e-12.
  static Strategy convex(std::vector<ConvexTerm> terms);

  const Variant& variant() const { return v_; }
  std::string name() const;

 private:
  Variant v_;
};

struct ConvexTerm {
  double weight;
  Strategy strategy;
};

/// Symmetric combination (R^t + R^{-t}) / 2.
Strategy symmetric_rotated(double t);

/// Dispatch. Throws Inapplicable when the strategy is undefined on the pair.
Channel evaluate(const Strategy& s, const FaithfulState& alpha, const Channel& e);

/// evaluate(s, e(alpha), evaluate(s, alpha, e)).
Channel iterate(const Strategy& s, const FaithfulState& alpha, const Channel& e);

/// Ad_{beta^{-ir}} o e o Ad_{alpha^{ir}} averaged over the nodes of mu.
Channel modular_twirl(const FaithfulState& alpha, const Channel& e, const Measure& mu);

}  // namespace retro
