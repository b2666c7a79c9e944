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
#include <optional>
#include <string>
#include <vector>

#include "retro/retrodiction.hpp"

namespace retro {

enum class Axiom {
  kStatePreservation,
  kNormalization,
  kCompositionStabilizing,
  kCompositionality,
  kTensorStabilizing,
  kTensoriality,
  kInverting,
  kInvolutivity,
  kBayesOnCStates,
};

/// All axioms, in report order.
const std::vector<Axiom>& all_axioms();
/// Machine token, e.g. "tensor_stabilizing".
std::string axiom_token(Axiom a);
/// Row label, e.g. "tensor-stabilizing".
std::string axiom_label(Axiom a);
/// Throws InvalidArgument for an unknown token.
Axiom parse_axiom(const std::string& token);

/// A test case for one axiom. Which optional members are set depends on the
/// shape: a single morphism (alpha, e), a composable pair (alpha, e, f) or a
/// tensor pair (alpha, e, alpha2, e2).
struct Instance {
  std::string label;
  FaithfulState alpha;
  Channel e;
  std::optional<Channel> f;
  std::optional<FaithfulState> alpha2;
  std::optional<Channel> e2;
  /// At least one factor is covariant with respect to its prior.
  bool covariant = false;
};

struct InstanceSet {
  std::vector<Instance> singles;
  std::vector<Instance> identities;
  std::vector<Instance> composables;
  std::vector<Instance> tensors;
  std::vector<Instance> isomorphisms;
};

/// Deterministic description of the random and hand-built test cases.
struct InstanceSuite {
  std::vector<std::uint64_t> seeds;
  std::vector<Algebra> dims;
  /// Fraction of generated cases forced to have a covariant factor.
  double covariant_fraction = 0.3;
  bool fixed_instances = true;
  /// Minimum eigenvalue of the random priors.
  double floor = 1e-3;

  /// dims {[2],[3],[1,1],[1,1,1],[2,1]}, seeds 0..24, covariant fraction 0.3.
  static InstanceSuite defaults();

  InstanceSet generate() const;
};

/// The hand-built cases: bit-flip composition and tensor witnesses, the
/// classical determinant-maximization counterexample and the involutivity
/// instance.
InstanceSet fixed_instances();

struct AxiomCheck {
  enum class Verdict { kHolds, kFails, kNotApplicable };

  Axiom axiom;
  std::string strategy;
  Verdict verdict = Verdict::kNotApplicable;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  int checked = 0;
  int skipped = 0;
  /// Worst instance when the verdict is kFails.
  std::optional<Instance> witness;
};

/// Deviation of a single instance for one axiom: superoperator operator norm
/// divided by the source matrix dimension (state preservation uses the
/// operator norm of the state difference). Throws Inapplicable and friends
/// when the strategy is undefined on the instance.
double instance_deviation(const Strategy& s, Axiom a, const Instance& inst);

/// Instances of the set relevant to an axiom.
std::vector<const Instance*> instances_for(Axiom a, const InstanceSet& set);

AxiomCheck check_axiom(const Strategy& s, Axiom a, const InstanceSet& set, double tol);
AxiomCheck check_axiom(const Strategy& s, Axiom a, const InstanceSuite& suite, double tol);

inline AxiomCheck check_state_preservation(const Strategy& s, const InstanceSuite& suite, double tol) {
  return check_axiom(s, Axiom::kStatePreservation, suite, tol);
}
inline AxiomCheck check_normalization(const Strategy& s, const InstanceSuite& suite, double tol) {
  return check_axiom(s, Axiom::kNormalization, suite, tol);
}
inline AxiomCheck check_compositionality(const Strategy& s, const InstanceSuite& suite, double tol) {
  return check_axiom(s, Axiom::kCompositionality, suite, tol);
}
inline AxiomCheck check_tensoriality(const Strategy& s, const InstanceSuite& suite, double tol) {
  return check_axiom(s, Axiom::kTensoriality, suite, tol);
}
enum class StabilizingMode { kComposition, kTensor };
inline AxiomCheck check_stabilizing(const Strategy& s, const InstanceSuite& suite, double tol, StabilizingMode mode) {
  return check_axiom(s, mode == StabilizingMode::kComposition ? Axiom::kCompositionStabilizing : Axiom::kTensorStabilizing,
                     suite, tol);
}
inline AxiomCheck check_inverting(const Strategy& s, const InstanceSuite& suite, double tol) {
  return check_axiom(s, Axiom::kInverting, suite, tol);
}
inline AxiomCheck check_involutivity(const Strategy& s, const InstanceSuite& suite, double tol) {
  return check_axiom(s, Axiom::kInvolutivity, suite, tol);
}
inline AxiomCheck check_bayes_on_cstates(const Strategy& s, const InstanceSuite& suite, double tol) {
  return check_axiom(s, Axiom::kBayesOnCStates, suite, tol);
}

// ---------------------------------------------------------------------------
// Property table.

enum class Expectation { kHolds, kFails, kUndetermined };

struct TableColumn {
  std::string label;
  Strategy strategy;
  double tolerance;
  std::vector<std::pair<Axiom, Expectation>> expected;

  Expectation expectation(Axiom a) const;
};

/// Petz, rotated (t = 0.7), smooth-average, STH, discard-and-prepare and the
/// classical determinant-maximizing map, with the known property pattern.
std::vector<TableColumn> standard_columns();

struct TableCell {
  std::string column;
  Axiom axiom;
  Expectation expected;
  AxiomCheck check;
  /// False only for an asserted cell whose verdict disagrees.
  bool agrees;
};

struct TableReport {
  std::vector<std::string> columns;
  std::vector<Axiom> rows;
  std::vector<TableCell> cells;

  bool all_agree() const;
  const TableCell& cell(const std::string& column, Axiom a) const;
};

TableReport build_table(const std::vector<TableColumn>& columns, const InstanceSuite& suite);

/// Aligned text table; undetermined cells are listed in a separate
/// "observed" section.
std::string render_table(const TableReport& r);

}  // namespace retro
