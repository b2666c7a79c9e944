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

#include "retro/retrodiction.hpp"

#include <cmath>
#include <sstream>

#include "retro/surace_scandi.hpp"

namespace retro {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_cptp(const Channel& e) {
  if (!is_cptp(e)) {
    const auto report = check_cptp(e);
    throw NotCptp("channel is not CPTP: " + report.diagnostic);
  }
}

// Block-diagonal change of basis vec(X) -> vec(W X W^dagger) built from the
// state's eigenvectors.
Matrix eigenbasis_superop(const FaithfulState& s) {
  const Algebra& a = s.algebra();
  Matrix u = Matrix::Zero(a.total_dim(), a.total_dim());
  for (int x = 0; x < a.num_blocks(); ++x) {
    const Matrix& w = s.eigenvectors(x);
    const int m = a.block_dim(x);
    u.block(a.offset(x), a.offset(x), m * m, m * m) = kron(w.conjugate(), w);
  }
  return u;
}

// Eigenvalue attached to each diagonal index of the vectorization, i.e.
// (row eigenvalue, column eigenvalue) of entry (j, k) in block x.
struct VecSpectrum {
  std::vector<double> row;
  std::vector<double> col;
};

VecSpectrum vec_spectrum(const FaithfulState& s) {
  const Algebra& a = s.algebra();
  VecSpectrum v;
  v.row.reserve(static_cast<std::size_t>(a.total_dim()));
  v.col.reserve(static_cast<std::size_t>(a.total_dim()));
  for (int x = 0; x < a.num_blocks(); ++x) {
    const RealVector& lam = s.eigenvalues(x);
    const int m = a.block_dim(x);
    for (int k = 0; k < m; ++k)
      for (int j = 0; j < m; ++j) {
        v.row.push_back(lam(j));
        v.col.push_back(lam(k));
      }
  }
  return v;
}

Channel compose3(const Channel& a, const Channel& b, const Channel& c) { return compose(a, compose(b, c)); }

}  // namespace

Channel petz(const FaithfulState& alpha, const Channel& e) {
  require_cptp(e);
  const FaithfulState beta = predict(e, alpha);
  Channel r = compose3(Channel::ad(alpha.power(0.5)), hs_adjoint(e), Channel::ad(beta.power(-0.5)));
  return r;
}

Channel rotated_petz(const FaithfulState& alpha, const Channel& e, double t) {
  require_cptp(e);
  const FaithfulState beta = predict(e, alpha);
  return compose3(Channel::ad(alpha.power(Complex(0.5, -t))), hs_adjoint(e),
                  Channel::ad(beta.power(Complex(-0.5, t))));
}

Channel modular_schur_petz(const FaithfulState& alpha, const Channel& e,
                           const std::function<Complex(double)>& phi) {
  require_cptp(e);
  const FaithfulState beta = predict(e, alpha);
  const Matrix ua = eigenbasis_superop(alpha);
  const Matrix ub = eigenbasis_superop(beta);
  Matrix k = ua.adjoint() * hs_adjoint(e).matrix() * ub;
  const VecSpectrum sa = vec_spectrum(alpha);
  const VecSpectrum sb = vec_spectrum(beta);
  for (Eigen::Index r = 0; r < k.rows(); ++r) {
    const auto ru = static_cast<std::size_t>(r);
    for (Eigen::Index c = 0; c < k.cols(); ++c) {
      const auto cu = static_cast<std::size_t>(c);
      const double w = (std::log(sb.row[cu]) - std::log(sb.col[cu])) - (std::log(sa.row[ru]) - std::log(sa.col[ru]));
      const double scale = std::sqrt(sa.row[ru] * sa.col[ru] / (sb.row[cu] * sb.col[cu]));
      k(r, c) *= scale * phi(w);
    }
  }
  return Channel(e.target(), e.source(), ua * k * ub.adjoint());
}

Channel averaged_petz(const FaithfulState& alpha, const Channel& e, const Measure& mu) {
  switch (mu.kind()) {
    case Measure::Kind::kDirac:
      return rotated_petz(alpha, e, mu.nodes().front().t);
    case Measure::Kind::kDiscrete: {
      Channel sum = rotated_petz(alpha, e, mu.nodes().front().t) * Complex(mu.nodes().front().weight);
      for (std::size_t i = 1; i < mu.nodes().size(); ++i)
        sum += rotated_petz(alpha, e, mu.nodes()[i].t) * Complex(mu.nodes()[i].weight);
      return sum;
    }
    case Measure::Kind::kJrsww:
      break;
  }
  return modular_schur_petz(alpha, e, [&mu](double w) { return mu.discrete_characteristic(w); });
}

Channel averaged_petz_exact(const FaithfulState& alpha, const Channel& e, const Measure& mu) {
  return modular_schur_petz(alpha, e, [&mu](double w) { return mu.characteristic(w); });
}

Channel sth(const FaithfulState& alpha, const Channel& e, const Element& u_alpha, const Element& u_beta,
            double tol) {
  const Channel p = petz(alpha, e);
  const FaithfulState beta = predict(e, alpha);
  if (!is_unitary(u_alpha, tol) || !is_unitary(u_beta, tol)) throw InvalidArgument("STH rotation is not unitary");
  if (!approx_equal(ad(u_alpha, alpha.element()), alpha.element(), tol))
    throw InvalidArgument("STH rotation does not leave the prior invariant");
  if (!approx_equal(ad(u_beta, beta.element()), beta.element(), tol))
    throw InvalidArgument("STH rotation does not leave the prediction invariant");
  return compose3(Channel::ad(u_alpha.adjoint()), p, Channel::ad(u_beta));
}

Channel discard_prepare(const FaithfulState& alpha, const Channel& e) {
  require_same(alpha.algebra(), e.source(), "discard_prepare");
  const Vector a = alpha.element().vectorize();
  const Vector tr = Element::identity(e.target()).vectorize();
  Channel r(e.target(), e.source(), a * tr.transpose());
  r.cache_cptp(true);
  return r;
}

Channel bayes_inverse(const FaithfulState& p, const Channel& e) {
  if (!e.source().is_commutative() || !e.target().is_commutative())
    throw Inapplicable("Bayes inverse needs commutative algebras");
  require_cptp(e);
  const FaithfulState q = predict(e, p);
  const RealMatrix m = e.stochastic();
  RealMatrix out(m.cols(), m.rows());
  for (Eigen::Index x = 0; x < m.cols(); ++x)
    for (Eigen::Index y = 0; y < m.rows(); ++y)
      out(x, y) = m(y, x) * p.element().block(static_cast<int>(x))(0, 0).real() /
                  q.element().block(static_cast<int>(y))(0, 0).real();
  return Channel::from_stochastic(out);
}

// ---------------------------------------------------------------------------

Element UnitaryAssignment::unitary_for(const FaithfulState& s) const {
  for (const auto& [state, u] : entries)
    if (state.algebra() == s.algebra() && approx_equal(state, s.element(), match_tol)) return u;
  const double g = gain * s.element().block(0)(0, 0).real();
  return s.power(Complex(0.0, g));
}

Strategy Strategy::convex(std::vector<ConvexTerm> terms) {
  if (terms.empty()) throw InvalidArgument("convex strategy needs at least one term");
  double total = 0.0;
  for (const auto& t : terms) {
    if (!(t.weight > 0.0)) throw InvalidArgument("convex weights must be positive");
    total += t.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) throw InvalidArgument("convex weights do not sum to 1");
  return Convex{std::move(terms)};
}

std::string Strategy::name() const {
  return std::visit(
      Overloaded{
          [](const Petz&) -> std::string { return "petz"; },
          [](const RotatedPetz& r) -> std::string {
            std::ostringstream os;
            os << "rotated(t=" << r.t << ")";
            return os.str();
          },
          [](const AveragedPetz& a) -> std::string {
            std::ostringstream os;
            switch (a.measure.kind()) {
              case Measure::Kind::kDirac:
                os << "averaged(dirac t=" << a.measure.nodes().front().t << ")";
                break;
              case Measure::Kind::kDiscrete:
                os << "averaged(discrete, " << a.measure.nodes().size() << " points)";
                break;
              case Measure::Kind::kJrsww:
                os << "jrsww(nodes=" << a.measure.jrsww_nodes() << ")";
                break;
            }
            return os.str();
          },
          [](const Sth&) -> std::string { return "sth"; },
          [](const DiscardPrepare&) -> std::string { return "discard_prepare"; },
          [](const Bayes&) -> std::string { return "bayes"; },
          [](const SuraceScandi&) -> std::string { return "surace_scandi"; },
          [](const Convex& c) -> std::string {
            std::ostringstream os;
            os << "convex[";
            for (std::size_t i = 0; i < c.terms.size(); ++i)
              os << (i ? ", " : "") << c.terms[i].weight << "*" << c.terms[i].strategy.name();
            os << "]";
            return os.str();
          },
          [](const CustomStrategy& c) -> std::string { return c.name; },
      },
      v_);
}

Strategy symmetric_rotated(double t) {
  return Strategy::convex({{0.5, Strategy::rotated(t)}, {0.5, Strategy::rotated(-t)}});
}

Channel evaluate(const Strategy& s, const FaithfulState& alpha, const Channel& e) {
  require_same(alpha.algebra(), e.source(), "evaluate");
  return std::visit(
      Overloaded{
          [&](const Petz&) { return petz(alpha, e); },
          [&](const RotatedPetz& r) { return rotated_petz(alpha, e, r.t); },
          [&](const AveragedPetz& a) { return averaged_petz(alpha, e, a.measure); },
          [&](const Sth& st) {
            const FaithfulState beta = predict(e, alpha);
            return sth(alpha, e, st.unitaries.unitary_for(alpha), st.unitaries.unitary_for(beta));
          },
          [&](const DiscardPrepare&) { return discard_prepare(alpha, e); },
          [&](const Bayes&) { return bayes_inverse(alpha, e); },
          [&](const SuraceScandi&) { return surace_scandi_classical(alpha, e); },
          [&](const Convex& c) {
            Channel sum = evaluate(c.terms.front().strategy, alpha, e) * Complex(c.terms.front().weight);
            for (std::size_t i = 1; i < c.terms.size(); ++i)
              sum += evaluate(c.terms[i].strategy, alpha, e) * Complex(c.terms[i].weight);
            return sum;
          },
          [&](const CustomStrategy& c) { return c.fn(alpha, e); },
      },
      s.variant());
}

Channel iterate(const Strategy& s, const FaithfulState& alpha, const Channel& e) {
  const FaithfulState beta = predict(e, alpha);
  return evaluate(s, beta, evaluate(s, alpha, e));
}

Channel modular_twirl(const FaithfulState& alpha, const Channel& e, const Measure& mu) {
  const FaithfulState beta = predict(e, alpha);
  auto term = [&](double r) {
    return compose3(Channel::ad(beta.power(Complex(0.0, -r))), e, Channel::ad(alpha.power(Complex(0.0, r))));
  };
  Channel sum = term(mu.nodes().front().t) * Complex(mu.nodes().front().weight);
  for (std::size_t i = 1; i < mu.nodes().size(); ++i) sum += term(mu.nodes()[i].t) * Complex(mu.nodes()[i].weight);
  return sum;
}

}  // namespace retro
