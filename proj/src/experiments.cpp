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

#include "retro/experiments.hpp"

#include <algorithm>
#include <array>
#include <boost/rational.hpp>
#include <cmath>
#include <limits>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "retro/random.hpp"
#include "retro/surace_scandi.hpp"

namespace retro {

namespace {

using std::numbers::pi;
using Rational = boost::rational<long long>;
using RationalMatrix = std::array<Rational, 4>;  // row-major 2 x 2

Matrix scalar(double v) { return Matrix::Constant(1, 1, Complex(v)); }
Matrix scalar(Complex v) { return Matrix::Constant(1, 1, v); }

// Coefficient of a Pauli string s in x: tr(s x) / d.
double pauli_coefficient(const Element& x, const Element& s) {
  return trace(s * x).real() / static_cast<double>(x.algebra().matrix_dim());
}

Matrix to_matrix(const RationalMatrix& r) {
  Matrix m(2, 2);
  for (int k = 0; k < 4; ++k) m(k / 2, k % 2) = boost::rational_cast<double>(r[static_cast<std::size_t>(k)]);
  return m;
}

Matrix to_matrix(const RealMatrix& r) { return r.cast<Complex>(); }

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

std::array<Rational, 2> apply(const RationalMatrix& e, const std::array<Rational, 2>& p) {
  return {e[0] * p[0] + e[1] * p[1], e[2] * p[0] + e[3] * p[1]};
}

// Bayes inverse Ebar(x|y) = E(y|x) p(x) / q(y), columns indexed by y.
RationalMatrix bayes(const std::array<Rational, 2>& p, const RationalMatrix& e) {
  const auto q = apply(e, p);
  RationalMatrix r;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      r[static_cast<std::size_t>(x * 2 + y)] = e[static_cast<std::size_t>(y * 2 + x)] * p[static_cast<std::size_t>(x)] /
                                               q[static_cast<std::size_t>(y)];
  return r;
}

RationalMatrix rational_first() { return {Rational(1, 10), Rational(3, 10), Rational(9, 10), Rational(7, 10)}; }
RationalMatrix rational_second() { return {Rational(3, 10), Rational(6, 10), Rational(7, 10), Rational(4, 10)}; }

GoldenResult exact(std::string name, const RationalMatrix& computed, const RationalMatrix& expected) {
  return {std::move(name), to_matrix(computed), to_matrix(expected), computed == expected ? 0.0 : 1.0,
          "exact rational arithmetic"};
}

}  // namespace

double GoldenResult::deviation() const {
  if (computed.rows() != expected.rows() || computed.cols() != expected.cols())
    return std::numeric_limits<double>::infinity();
  if (computed.size() == 0) return 0.0;
  return (computed - expected).cwiseAbs().maxCoeff();
}

double bitflip_theta() { return std::exp(2.0 * pi) / (1.0 + std::exp(2.0 * pi)); }
double bitflip_p() { return std::tanh(pi / 2.0) / (2.0 * std::sinh(pi)); }
double involution_theta() { return 1.0 / (1.0 + std::exp(pi * (std::numbers::sqrt2 + 1.0) / 2.0)); }
double involution_p() {
  return std::sinh(pi / 2.0) / (std::sinh(pi / 2.0) + std::sinh(pi / std::numbers::sqrt2));
}

FaithfulState qubit_diagonal(double theta) {
  const double eig[] = {theta, 1.0 - theta};
  return FaithfulState::diagonal_matrix(eig);
}

RealMatrix counterexample_first() {
  RealMatrix e(2, 2);
  e << 0.1, 0.3, 0.9, 0.7;
  return e;
}

RealMatrix counterexample_second() {
  RealMatrix f(2, 2);
  f << 0.3, 0.6, 0.7, 0.4;
  return f;
}

// ---------------------------------------------------------------------------

std::vector<GoldenResult> bitflip_rotated_convex() {
  std::vector<GoldenResult> out;
  const std::string tag = "bitflip_rotated_convex/";
  const FaithfulState alpha = qubit_diagonal(bitflip_theta());
  const Channel e = bit_flip(bitflip_p());
  const Channel f = bit_flip(0.5);
  const FaithfulState beta = predict(e, alpha);
  const Strategy s = symmetric_rotated(0.5);

  out.push_back({tag + "prediction", scalar(beta.element().block(0)(0, 0)),
                 scalar(std::exp(pi) / (1.0 + std::exp(pi))), 1e-12, "closed form e^pi / (1 + e^pi)"});

  const Element direct = evaluate(s, alpha, compose(f, e)).apply(e01());
  out.push_back({tag + "direct_e01", direct.dense(), (pauli_x() * Complex(-1.0 / (2.0 * std::cosh(pi)))).dense(), 1e-10,
                 "closed form -1/(2 cosh pi) sigma_x"});

  const Element split = compose(evaluate(s, alpha, e), evaluate(s, beta, f)).apply(e01());
  out.push_back({tag + "composite_e01", split.dense(), Matrix::Zero(2, 2), 1e-10, "closed form 0"});

  // Tensor witness: the joint map picks up a sigma_y (x) sigma_y term that the
  // product of the individual maps lacks.
  {
    const double theta = 1.0 / (1.0 + std::exp(pi));
    const FaithfulState a = qubit_diagonal(theta);
    const Channel b = bit_flip(0.5);
    const Element probe = tensor(e01(), e01());
    const Element yy = tensor(pauli_y(), pauli_y());
    const Element joint = evaluate(s, tensor(a, a), tensor(b, b)).apply(probe);
    const Element product = tensor(evaluate(s, a, b), evaluate(s, a, b)).apply(probe);
    out.push_back({tag + "tensor_joint_yy", scalar(pauli_coefficient(joint, yy)),
                   scalar(theta * (1.0 - theta)), 1e-10, "closed form 1/(4 cosh^2(pi/2))"});
    out.push_back({tag + "tensor_product_yy", scalar(pauli_coefficient(product, yy)), scalar(0.0), 1e-10,
                   "closed form 0"});
  }

  // General prior: sqrt(theta (1 - theta)) cos(ln(theta / (1 - theta)) t) sigma_x.
  Rng rng(20260101);
  for (int k = 0; k < 5; ++k) {
    const double theta = rng.uniform(0.05, 0.95);
    const FaithfulState a = qubit_diagonal(theta);
    const Element v = evaluate(s, a, bit_flip(0.5)).apply(e01());
    const double expected = std::sqrt(theta * (1.0 - theta)) * std::cos(std::log(theta / (1.0 - theta)) * 0.5);
    out.push_back({tag + "general_prior_" + std::to_string(k), v.dense(), (pauli_x() * Complex(expected)).dense(),
                   1e-12, "closed form sqrt(theta(1-theta)) cos(t ln(theta/(1-theta))) sigma_x"});
  }
  return out;
}

std::vector<GoldenResult> jrsww_bitflip(int nodes) {
  std::vector<GoldenResult> out;
  const std::string tag = "jrsww_bitflip/";
  const Measure mu = Measure::jrsww(nodes);
  const Strategy s = Strategy::averaged(mu);
  const double theta = bitflip_theta();
  const FaithfulState alpha = qubit_diagonal(theta);
  const Channel e = bit_flip(bitflip_p());
  const Channel f = bit_flip(0.5);
  const FaithfulState beta = predict(e, alpha);
  const Channel fe = compose(f, e);
  const Element x = pauli_x();

  out.push_back({tag + "mass", scalar(mu.mass()), scalar(1.0), 1e-12, "probability measure"});

  const double direct_closed = pi * std::sqrt(theta * (1.0 - theta)) / std::sinh(pi);
  const double ratio_closed = (pi / 2.0) * (4.0 - 3.0 * std::cosh(pi) - std::cosh(3.0 * pi)) /
                              (std::sinh(pi) + std::sinh(2.0 * pi) - std::sinh(3.0 * pi));

  const double direct_q = pauli_coefficient(evaluate(s, alpha, fe).apply(e01()), x);
  const double split_q =
      pauli_coefficient(compose(evaluate(s, alpha, e), evaluate(s, beta, f)).apply(e01()), x);
  const double direct_x = pauli_coefficient(averaged_petz_exact(alpha, fe, mu).apply(e01()), x);
  const double split_x =
      pauli_coefficient(compose(averaged_petz_exact(alpha, e, mu), averaged_petz_exact(beta, f, mu)).apply(e01()), x);

  out.push_back({tag + "direct_quadrature", scalar(direct_q), scalar(direct_closed), 1e-8,
                 "closed form pi sqrt(theta(1-theta)) / sinh pi"});
  out.push_back({tag + "direct_exact", scalar(direct_x), scalar(direct_closed), 1e-12,
                 "closed form pi sqrt(theta(1-theta)) / sinh pi"});
  out.push_back({tag + "ratio_quadrature", scalar(split_q / direct_q), scalar(ratio_closed), 1e-8,
                 "closed form (pi/2)(4 - 3 cosh pi - cosh 3pi) / (sinh pi + sinh 2pi - sinh 3pi)"});
  out.push_back({tag + "ratio_exact", scalar(split_x / direct_x), scalar(ratio_closed), 1e-12,
                 "closed form (pi/2)(4 - 3 cosh pi - cosh 3pi) / (sinh pi + sinh 2pi - sinh 3pi)"});
  out.push_back({tag + "ratio_routes_agree", scalar(split_q / direct_q), scalar(split_x / direct_x), 1e-8,
                 "quadrature against exact characteristic function"});

  // Tensor witness at theta = 1/(1 + e^{2 pi}), coefficients divided by theta(1-theta).
  {
    const double t2 = 1.0 / (1.0 + std::exp(2.0 * pi));
    const double norm = t2 * (1.0 - t2);
    const FaithfulState a = qubit_diagonal(t2);
    const Channel b = bit_flip(0.5);
    const Element probe = tensor(e01(), e01());
    const Element xx = tensor(pauli_x(), pauli_x());
    const Element yy = tensor(pauli_y(), pauli_y());
    const Element joint = evaluate(s, tensor(a, a), tensor(b, b)).apply(probe);
    const Element product = tensor(evaluate(s, a, b), evaluate(s, a, b)).apply(probe);
    const double phi4 = pi / (std::sinh(pi) * std::cosh(pi));
    const double indiv = pi * pi / (std::sinh(pi) * std::sinh(pi));
    out.push_back({tag + "tensor_product_xx", scalar(pauli_coefficient(product, xx) / norm), scalar(indiv), 1e-8,
                   "closed form pi^2 / sinh^2 pi"});
    out.push_back({tag + "tensor_product_yy", scalar(pauli_coefficient(product, yy) / norm), scalar(0.0), 1e-8,
                   "closed form 0"});
    out.push_back({tag + "tensor_joint_xx", scalar(pauli_coefficient(joint, xx) / norm), scalar((1.0 + phi4) / 2.0),
                   1e-8, "closed form (pi/2)(1/pi + 1/(cosh pi sinh pi))"});
    out.push_back({tag + "tensor_joint_yy", scalar(pauli_coefficient(joint, yy) / norm), scalar((1.0 - phi4) / 2.0),
                   1e-8, "closed form (pi/2)(1/pi - 1/(cosh pi sinh pi))"});
  }
  return out;
}

std::vector<GoldenResult> surace_scandi_counterexample() {
  std::vector<GoldenResult> out;
  const std::string tag = "surace_scandi_counterexample/";
  const std::array<Rational, 2> alpha{Rational(1, 2), Rational(1, 2)};
  const RationalMatrix e = rational_first();
  const RationalMatrix f = rational_second();
  const auto beta = apply(e, alpha);
  const auto gamma = apply(f, beta);
  const RationalMatrix fe = multiply(f, e);

  const RationalMatrix r_e = surace_scandi_2x2(alpha, e);
  const RationalMatrix r_f = surace_scandi_2x2(beta, f);
  const RationalMatrix r_fe = surace_scandi_2x2(alpha, fe);
  const RationalMatrix composite = multiply(r_e, r_f);

  out.push_back(exact(tag + "beta", {beta[0], Rational(0), beta[1], Rational(0)},
                      {Rational(1, 5), Rational(0), Rational(4, 5), Rational(0)}));
  out.push_back(exact(tag + "gamma", {gamma[0], Rational(0), gamma[1], Rational(0)},
                      {Rational(27, 50), Rational(0), Rational(23, 50), Rational(0)}));
  out.push_back(exact(tag + "first", r_e, {Rational(0), Rational(5, 8), Rational(1), Rational(3, 8)}));
  out.push_back(exact(tag + "second", r_f, {Rational(0), Rational(10, 23), Rational(1), Rational(13, 23)}));
  out.push_back(exact(tag + "direct", r_fe, {Rational(25, 27), Rational(0), Rational(2, 27), Rational(1)}));
  out.push_back(
      exact(tag + "composite", composite, {Rational(5, 8), Rational(65, 184), Rational(3, 8), Rational(119, 184)}));
  out.push_back(exact(tag + "composite_minus_direct",
                      {composite[0] - r_fe[0], composite[1] - r_fe[1], composite[2] - r_fe[2], composite[3] - r_fe[3]},
                      {Rational(5, 8) - Rational(25, 27), Rational(65, 184), Rational(3, 8) - Rational(2, 27),
                       Rational(119, 184) - Rational(1)}));
  out.push_back(exact(tag + "bayes_first", bayes(alpha, e),
                      {Rational(1, 4), Rational(9, 16), Rational(3, 4), Rational(7, 16)}));

  // Floating-point route through the general solver and the channel API.
  const double half[] = {0.5, 0.5};
  const FaithfulState a = FaithfulState::classical(half);
  const Channel ce = Channel::from_stochastic(counterexample_first());
  const Channel cf = Channel::from_stochastic(counterexample_second());
  const Strategy ss = Strategy::surace_scandi();
  const FaithfulState b = predict(ce, a);
  RealVector p(2);
  p << 0.5, 0.5;
  RealMatrix fe_d = counterexample_second() * counterexample_first();
  out.push_back({tag + "first_float", evaluate(ss, a, ce).stochastic().cast<Complex>(), to_matrix(r_e), 1e-12,
                 "exact rational value"});
  out.push_back({tag + "second_float", evaluate(ss, b, cf).stochastic().cast<Complex>(), to_matrix(r_f), 1e-12,
                 "exact rational value"});
  out.push_back({tag + "direct_float", to_matrix(solve_surace_scandi(p, fe_d).r), to_matrix(r_fe), 1e-12,
                 "exact rational value"});
  out.push_back({tag + "composite_float",
                 compose(evaluate(ss, a, ce), evaluate(ss, b, cf)).stochastic().cast<Complex>(), to_matrix(composite),
                 1e-12, "exact rational value"});
  return out;
}

std::vector<GoldenResult> involution_uniqueness(double grid_step) {
  if (!(grid_step > 0.0)) throw InvalidArgument("grid step must be positive");
  std::vector<GoldenResult> out;
  const std::string tag = "involution_uniqueness/";
  const double theta = involution_theta();
  const FaithfulState alpha = qubit_diagonal(theta);
  const Channel e = bit_flip(involution_p());
  const FaithfulState beta = predict(e, alpha);
  const double phi = beta.element().block(0)(0, 0).real();
  const double chi = theta * (1.0 - phi) / ((1.0 - theta) * phi);
  const double omega = (1.0 - theta) * (1.0 - phi) / (theta * phi);

  out.push_back({tag + "prediction", scalar(phi),
                 scalar(1.0 / (1.0 + std::exp(pi * (std::numbers::sqrt2 - 1.0) / 2.0))), 1e-10,
                 "closed form 1 / (1 + e^{pi (sqrt 2 - 1) / 2})"});
  out.push_back({tag + "ln_chi", scalar(std::log(chi)), scalar(-pi), 1e-10, "closed form -pi"});
  out.push_back({tag + "ln_omega", scalar(std::log(omega)), scalar(pi * std::numbers::sqrt2), 1e-10,
                 "closed form pi sqrt 2"});

  // The iterate of the rotated map is Ad_{beta^{-2it}} o e o Ad_{alpha^{2it}};
  // its Choi entry (0, 3) is (1 - p) chi^{2it}.
  {
    const double t = 0.01;
    const Channel it = iterate(Strategy::rotated(t), alpha, e);
    const Complex entry = choi_blocks(it)[0](0, 3);
    out.push_back({tag + "ln_chi_from_choi_phase", scalar(std::arg(entry) / (2.0 * t)), scalar(-pi), 1e-10,
                   "closed form -pi"});
    out.push_back({tag + "choi_modulus", scalar(std::abs(entry)), scalar(1.0 - involution_p()), 1e-12,
                   "closed form 1 - p"});
  }

  out.push_back({tag + "residual_t0", scalar(deviation(iterate(Strategy::rotated(0.0), alpha, e), e)), scalar(0.0),
                 1e-9, "involutivity of the Petz map"});

  // Falsification scan over the grid, excluding t = 0.
  const int steps = static_cast<int>(std::llround(3.0 / grid_step));
  int small = 0;
  double min_residual = std::numeric_limits<double>::infinity();
  for (int k = -steps; k <= steps; ++k) {
    if (k == 0) continue;
    const double t = k * grid_step;
    const double r = deviation(iterate(Strategy::rotated(t), alpha, e), e);
    min_residual = std::min(min_residual, r);
    if (!(r > 1e-3)) ++small;
  }
  std::ostringstream note;
  note << std::setprecision(6) << "count of grid t != 0 with residual <= 1e-3 (min residual " << min_residual << ")";
  out.push_back({tag + "grid_points_with_small_residual", scalar(static_cast<double>(small)), scalar(0.0), 0.0,
                 note.str()});
  return out;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& experiment_tokens() {
  static const std::vector<std::string> tokens{"appendix-b", "appendix-c", "appendix-d", "involution"};
  return tokens;
}

std::vector<GoldenResult> run_experiment(const std::string& token) {
  if (token == "appendix-b") return bitflip_rotated_convex();
  if (token == "appendix-c") return jrsww_bitflip();
  if (token == "appendix-d") return surace_scandi_counterexample();
  if (token == "involution") return involution_uniqueness();
  if (token == "all") {
    std::vector<GoldenResult> all;
    for (const auto& t : experiment_tokens()) {
      auto part = run_experiment(t);
      all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return all;
  }
  throw InvalidArgument("unknown experiment '" + token + "'");
}

std::string format_results(const std::vector<GoldenResult>& results) {
  std::ostringstream os;
  os << std::setprecision(6);
  int failed = 0;
  for (const auto& r : results) {
    const bool ok = r.pass();
    if (!ok) ++failed;
    os << (ok ? "PASS " : "FAIL ") << r.name << "  deviation " << std::scientific << r.deviation() << " (tol "
       << r.tolerance << ")" << std::defaultfloat << "\n";
    if (!ok) {
      const Eigen::IOFormat fmt(12, 0, ", ", "\n", "      [", "]");
      os << "    computed:\n" << r.computed.format(fmt) << "\n    expected:\n" << r.expected.format(fmt) << "\n";
    }
  }
  os << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " passed\n";
  return os.str();
}

}  // namespace retro
