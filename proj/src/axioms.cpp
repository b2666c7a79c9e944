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

#include "retro/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "retro/experiments.hpp"
#include "retro/random.hpp"

namespace retro {

namespace {

struct AxiomName {
  Axiom axiom;
  const char* token;
  const char* label;
};

constexpr AxiomName kAxiomNames[] = {
    {Axiom::kStatePreservation, "state_preservation", "state preservation"},
    {Axiom::kNormalization, "normalization", "normalization"},
    {Axiom::kCompositionStabilizing, "composition_stabilizing", "composition-stabilizing"},
    {Axiom::kCompositionality, "compositionality", "compositionality"},
    {Axiom::kTensorStabilizing, "tensor_stabilizing", "tensor-stabilizing"},
    {Axiom::kTensoriality, "tensoriality", "tensoriality"},
    {Axiom::kInverting, "inverting", "inverting"},
    {Axiom::kInvolutivity, "involutivity", "involutivity"},
    {Axiom::kBayesOnCStates, "bayes", "Bayes on classical states"},
};

const AxiomName& name_of(Axiom a) {
  for (const auto& n : kAxiomNames)
    if (n.axiom == a) return n;
  throw InvalidArgument("unknown axiom");
}

bool covariant_at(const Channel& e, const FaithfulState& alpha) {
  try {
    return is_covariant(e, alpha);
  } catch (const NotFaithful&) {
    return false;
  }
}

bool covariant_pair(const Instance& inst) {
  if (covariant_at(inst.e, inst.alpha)) return true;
  if (inst.f) {
    try {
      return covariant_at(*inst.f, predict(inst.e, inst.alpha));
    } catch (const NotFaithful&) {
      return false;
    }
  }
  if (inst.e2 && inst.alpha2) return covariant_at(*inst.e2, *inst.alpha2);
  return false;
}

// Prior and morphism for one generated case; forced cases draw from three
// covariant families (state-preserving isomorphism, unital mixed-unitary
// channel at the maximally mixed state, classical channel).
struct Morphism {
  FaithfulState alpha;
  Channel e;
};

Morphism make_morphism(const Algebra& a, const Algebra& b, bool forced, std::uint64_t kind, double floor, Rng& rng) {
  const std::uint64_t s1 = rng.split(11).seed();
  const std::uint64_t s2 = rng.split(12).seed();
  if (forced) {
    switch (kind % 3) {
      case 0:
        return {random_faithful_state(a, floor, s1), random_isomorphism(a, s2)};
      case 2:
        if (a.is_commutative()) {
          const Algebra target = b.is_commutative() ? b : a;
          return {random_faithful_state(a, floor, s1), random_channel(a, target, 2, s2)};
        }
        [[fallthrough]];
      default:
        return {FaithfulState::maximally_mixed(a), random_mixed_unitary(a, 3, s2)};
    }
  }
  return {random_faithful_state(a, floor, s1), random_channel(a, b, 2, s2)};
}

std::string describe(const char* what, const Algebra& a, std::uint64_t seed, bool forced) {
  std::ostringstream os;
  os << what << " dims=" << to_string(a) << " seed=" << seed << (forced ? " (covariant family)" : "");
  return os.str();
}

void append(std::vector<Instance>& to, const std::vector<Instance>& from) { to.insert(to.end(), from.begin(), from.end()); }

std::string mark(const AxiomCheck& c) {
  switch (c.verdict) {
    case AxiomCheck::Verdict::kHolds:
      return "yes";
    case AxiomCheck::Verdict::kFails:
      return "no";
    case AxiomCheck::Verdict::kNotApplicable:
      return "n/a";
  }
  return "?";
}

}  // namespace

const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> all = [] {
    std::vector<Axiom> v;
    for (const auto& n : kAxiomNames) v.push_back(n.axiom);
    return v;
  }();
  return all;
}

std::string axiom_token(Axiom a) { return name_of(a).token; }
std::string axiom_label(Axiom a) { return name_of(a).label; }

Axiom parse_axiom(const std::string& token) {
  for (const auto& n : kAxiomNames)
    if (token == n.token) return n.axiom;
  throw InvalidArgument("unknown axiom '" + token + "'");
}

// ---------------------------------------------------------------------------

InstanceSuite InstanceSuite::defaults() {
  InstanceSuite s;
  for (std::uint64_t k = 0; k < 25; ++k) s.seeds.push_back(k);
  s.dims = {Algebra({2}), Algebra({3}), Algebra({1, 1}), Algebra({1, 1, 1}), Algebra({2, 1})};
  return s;
}

InstanceSet InstanceSuite::generate() const {
  InstanceSet set;
  const auto n = dims.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Algebra& a = dims[i];
    for (std::uint64_t seed : seeds) {
      Rng rng = Rng(seed).split(i);
      const bool forced = rng.uniform() < covariant_fraction;
      const bool same = a.is_commutative() && seed % 2 == 0;
      const Algebra& b = same ? a : dims[(i + seed) % n];
      const Algebra& c = same ? a : dims[(i + 2 * seed + 1) % n];

      Rng r1 = rng.split(1);
      Morphism m = make_morphism(a, b, forced, seed, floor, r1);
      Instance single{describe("single", a, seed, forced), m.alpha, m.e, {}, {}, {}, false};
      single.covariant = covariant_pair(single);
      set.singles.push_back(single);

      set.identities.push_back(
          {describe("identity", a, seed, false), m.alpha, Channel::identity(a), {}, {}, {}, true});

      Rng r2 = rng.split(2);
      set.isomorphisms.push_back({describe("isomorphism", a, seed, false),
                                  random_faithful_state(a, floor, r2.split(1).seed()),
                                  random_isomorphism(a, r2.split(2).seed()), {}, {}, {}, true});

      // Composable pair; the forced family alternates which factor is covariant.
      Rng r3 = rng.split(3);
      const Algebra& mid = m.e.target();
      Channel f = (forced && seed % 2 == 1) ? random_isomorphism(mid, r3.split(1).seed())
                                            : random_channel(mid, (forced || same) ? mid : c, 2, r3.split(2).seed());
      Instance comp{describe("composable", a, seed, forced), m.alpha, m.e, f, {}, {}, false};
      comp.covariant = covariant_pair(comp);
      set.composables.push_back(comp);

      Rng r4 = rng.split(4);
      const Algebra& a2 = dims[(i + seed + 1) % n];
      const Algebra& b2 = (a2.is_commutative() && seed % 2 == 0) ? a2 : dims[(i + 2 * seed + 2) % n];
      Morphism m2 = make_morphism(a2, b2, false, 0, floor, r4);
      Instance tens{describe("tensor", a, seed, forced), m.alpha, m.e, {}, m2.alpha, m2.e, false};
      tens.covariant = covariant_pair(tens);
      set.tensors.push_back(tens);
    }
  }
  if (fixed_instances) {
    const InstanceSet fixed = retro::fixed_instances();
    append(set.singles, fixed.singles);
    append(set.identities, fixed.identities);
    append(set.composables, fixed.composables);
    append(set.tensors, fixed.tensors);
    append(set.isomorphisms, fixed.isomorphisms);
  }
  return set;
}

InstanceSet fixed_instances() {
  using std::numbers::pi;
  InstanceSet set;
  const FaithfulState half = FaithfulState::classical(std::vector<double>{0.5, 0.5});
  const Channel ce = Channel::from_stochastic(counterexample_first());
  const Channel cf = Channel::from_stochastic(counterexample_second());
  const FaithfulState bit = qubit_diagonal(bitflip_theta());

  auto finish = [](Instance inst) {
    inst.covariant = covariant_pair(inst);
    return inst;
  };
  set.singles.push_back(finish({"involutivity bit-flip instance", qubit_diagonal(involution_theta()),
                                bit_flip(involution_p()), {}, {}, {}, false}));
  set.singles.push_back(finish({"classical counterexample, first map", half, ce, {}, {}, {}, false}));
  set.singles.push_back(finish({"bit-flip composition witness, first map", bit, bit_flip(bitflip_p()), {}, {}, {}, false}));

  set.composables.push_back(
      finish({"bit-flip composition witness", bit, bit_flip(bitflip_p()), bit_flip(0.5), {}, {}, false}));
  set.composables.push_back(finish({"classical counterexample", half, ce, cf, {}, {}, false}));

  const FaithfulState tb = qubit_diagonal(1.0 / (1.0 + std::exp(pi)));
  const FaithfulState tc = qubit_diagonal(1.0 / (1.0 + std::exp(2.0 * pi)));
  set.tensors.push_back(finish({"bit-flip tensor witness", tb, bit_flip(0.5), {}, tb, bit_flip(0.5), false}));
  set.tensors.push_back(finish({"smooth-average tensor witness", tc, bit_flip(0.5), {}, tc, bit_flip(0.5), false}));

  set.isomorphisms.push_back(finish({"qubit flip", bit, Channel::ad(pauli_x()), {}, {}, {}, false}));
  set.identities.push_back(finish({"qubit identity", bit, Channel::identity(Algebra::matrix(2)), {}, {}, {}, false}));
  return set;
}

// ---------------------------------------------------------------------------

double instance_deviation(const Strategy& s, Axiom a, const Instance& inst) {
  switch (a) {
    case Axiom::kStatePreservation: {
      const FaithfulState beta = predict(inst.e, inst.alpha);
      return (evaluate(s, inst.alpha, inst.e).apply(beta.element()) - inst.alpha.element()).norm();
    }
    case Axiom::kNormalization:
      return deviation(evaluate(s, inst.alpha, inst.e), Channel::identity(inst.alpha.algebra()));
    case Axiom::kCompositionStabilizing:
    case Axiom::kCompositionality: {
      if (!inst.f) throw InvalidArgument("composable instance expected");
      const FaithfulState beta = predict(inst.e, inst.alpha);
      const Channel joint = evaluate(s, inst.alpha, compose(*inst.f, inst.e));
      const Channel split = compose(evaluate(s, inst.alpha, inst.e), evaluate(s, beta, *inst.f));
      return deviation(joint, split);
    }
    case Axiom::kTensorStabilizing:
    case Axiom::kTensoriality: {
      if (!inst.e2 || !inst.alpha2) throw InvalidArgument("tensor instance expected");
      const Channel joint = evaluate(s, tensor(inst.alpha, *inst.alpha2), tensor(inst.e, *inst.e2));
      const Channel split = tensor(evaluate(s, inst.alpha, inst.e), evaluate(s, *inst.alpha2, *inst.e2));
      return deviation(joint, split);
    }
    case Axiom::kInverting:
      return deviation(evaluate(s, inst.alpha, inst.e), invert_iso(inst.e));
    case Axiom::kInvolutivity:
      return deviation(iterate(s, inst.alpha, inst.e), inst.e);
    case Axiom::kBayesOnCStates:
      return deviation(evaluate(s, inst.alpha, inst.e), bayes_inverse(inst.alpha, inst.e));
  }
  throw InvalidArgument("unknown axiom");
}

std::vector<const Instance*> instances_for(Axiom a, const InstanceSet& set) {
  std::vector<const Instance*> out;
  auto all = [&out](const std::vector<Instance>& v) {
    for (const auto& i : v) out.push_back(&i);
  };
  auto covariant = [&out](const std::vector<Instance>& v) {
    for (const auto& i : v)
      if (i.covariant) out.push_back(&i);
  };
  switch (a) {
    case Axiom::kStatePreservation:
      all(set.singles);
      all(set.isomorphisms);
      break;
    case Axiom::kNormalization:
      all(set.identities);
      break;
    case Axiom::kCompositionality:
      all(set.composables);
      break;
    case Axiom::kCompositionStabilizing:
      covariant(set.composables);
      break;
    case Axiom::kTensoriality:
      all(set.tensors);
      break;
    case Axiom::kTensorStabilizing:
      covariant(set.tensors);
      break;
    case Axiom::kInverting:
      all(set.isomorphisms);
      all(set.identities);
      break;
    case Axiom::kInvolutivity:
      all(set.singles);
      break;
    case Axiom::kBayesOnCStates:
      for (const auto& i : set.singles)
        if (i.e.source().is_commutative() && i.e.target().is_commutative()) out.push_back(&i);
      break;
  }
  return out;
}

AxiomCheck check_axiom(const Strategy& s, Axiom a, const InstanceSet& set, double tol) {
  AxiomCheck c;
  c.axiom = a;
  c.strategy = s.name();
  c.tolerance = tol;
  const Instance* worst = nullptr;
  for (const Instance* inst : instances_for(a, set)) {
    double d = 0.0;
    try {
      d = instance_deviation(s, a, *inst);
    } catch (const Inapplicable&) {
      ++c.skipped;
      continue;
    } catch (const Infeasible&) {
      ++c.skipped;
      continue;
    } catch (const NotFaithful&) {
      ++c.skipped;
      continue;
    }
    ++c.checked;
    if (!std::isfinite(d)) d = std::numeric_limits<double>::infinity();
    if (worst == nullptr || d > c.max_deviation) {
      c.max_deviation = d;
      worst = inst;
    }
  }
  if (c.checked == 0) {
    c.verdict = AxiomCheck::Verdict::kNotApplicable;
  } else if (c.max_deviation <= tol) {
    c.verdict = AxiomCheck::Verdict::kHolds;
  } else {
    c.verdict = AxiomCheck::Verdict::kFails;
    c.witness = *worst;
  }
  return c;
}

AxiomCheck check_axiom(const Strategy& s, Axiom a, const InstanceSuite& suite, double tol) {
  return check_axiom(s, a, suite.generate(), tol);
}

// ---------------------------------------------------------------------------

Expectation TableColumn::expectation(Axiom a) const {
  for (const auto& [axiom, e] : expected)
    if (axiom == a) return e;
  return Expectation::kHolds;
}

std::vector<TableColumn> standard_columns() {
  constexpr auto Y = Expectation::kHolds;
  constexpr auto N = Expectation::kFails;
  constexpr auto U = Expectation::kUndetermined;
  using A = Axiom;
  auto pattern = [](Expectation norm, Expectation cstab, Expectation comp, Expectation tstab, Expectation tens,
                    Expectation inv, Expectation invol, Expectation bayes) {
    return std::vector<std::pair<Axiom, Expectation>>{
        {A::kStatePreservation, Expectation::kHolds}, {A::kNormalization, norm},
        {A::kCompositionStabilizing, cstab},          {A::kCompositionality, comp},
        {A::kTensorStabilizing, tstab},               {A::kTensoriality, tens},
        {A::kInverting, inv},                         {A::kInvolutivity, invol},
        {A::kBayesOnCStates, bayes}};
  };
  return {
      {"Petz", Strategy::petz(), 1e-8, pattern(Y, Y, Y, Y, Y, Y, Y, Y)},
      {"rotated t=0.7", Strategy::rotated(0.7), 1e-8, pattern(Y, Y, Y, Y, Y, Y, N, Y)},
      {"JRSWW average", Strategy::jrsww(), 1e-6, pattern(Y, Y, N, Y, N, Y, N, Y)},
      {"STH", Strategy::sth(), 1e-8, pattern(Y, Y, Y, N, N, N, N, Y)},
      {"discard-prepare", Strategy::discard_prepare(), 1e-8, pattern(N, Y, Y, Y, Y, N, N, N)},
      {"Surace-Scandi", Strategy::surace_scandi(), 1e-8, pattern(Y, N, N, U, U, Y, N, N)},
  };
}

bool TableReport::all_agree() const {
  return std::all_of(cells.begin(), cells.end(), [](const TableCell& c) { return c.agrees; });
}

const TableCell& TableReport::cell(const std::string& column, Axiom a) const {
  for (const auto& c : cells)
    if (c.column == column && c.axiom == a) return c;
  throw InvalidArgument("no table cell for " + column + " / " + axiom_token(a));
}

TableReport build_table(const std::vector<TableColumn>& columns, const InstanceSuite& suite) {
  TableReport r;
  r.rows = all_axioms();
  const InstanceSet set = suite.generate();
  for (const auto& col : columns) {
    r.columns.push_back(col.label);
    for (Axiom a : r.rows) {
      TableCell cell{col.label, a, col.expectation(a), check_axiom(col.strategy, a, set, col.tolerance), true};
      switch (cell.expected) {
        case Expectation::kHolds:
          cell.agrees = cell.check.verdict == AxiomCheck::Verdict::kHolds;
          break;
        case Expectation::kFails:
          cell.agrees = cell.check.verdict == AxiomCheck::Verdict::kFails;
          break;
        case Expectation::kUndetermined:
          break;
      }
      r.cells.push_back(std::move(cell));
    }
  }
  return r;
}

std::string render_table(const TableReport& r) {
  std::ostringstream os;
  std::size_t label_width = 0;
  for (Axiom a : r.rows) label_width = std::max(label_width, axiom_label(a).size());
  std::size_t col_width = 6;
  for (const auto& c : r.columns) col_width = std::max(col_width, c.size());
  os << std::left << std::setw(static_cast<int>(label_width)) << "" << " |";
  for (const auto& c : r.columns) os << ' ' << std::setw(static_cast<int>(col_width)) << c;
  os << '\n' << std::string(label_width + 2 + r.columns.size() * (col_width + 1), '-') << '\n';
  for (Axiom a : r.rows) {
    os << std::setw(static_cast<int>(label_width)) << axiom_label(a) << " |";
    for (const auto& c : r.columns) {
      const TableCell& cell = r.cell(c, a);
      std::string m = cell.expected == Expectation::kUndetermined ? "?" : mark(cell.check);
      if (!cell.agrees) m += " (MISMATCH)";
      os << ' ' << std::setw(static_cast<int>(col_width)) << m;
    }
    os << '\n';
  }
  os << "\nobserved (not asserted):\n";
  bool any = false;
  for (const auto& cell : r.cells) {
    if (cell.expected != Expectation::kUndetermined) continue;
    any = true;
    os << "  " << cell.column << " / " << axiom_label(cell.axiom) << ": " << mark(cell.check)
       << " (max deviation " << std::setprecision(3) << std::scientific << cell.check.max_deviation << " over "
       << cell.check.checked << " instances, " << cell.check.skipped << " skipped)\n"
       << std::defaultfloat;
  }
  if (!any) os << "  none\n";
  os << "\nall asserted cells agree: " << (r.all_agree() ? "yes" : "no") << '\n';
  return os.str();
}

}  // namespace retro
