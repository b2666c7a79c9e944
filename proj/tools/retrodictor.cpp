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

// Command-line front end.
//
// Exit codes:
//   0  success, every asserted check agrees
//   1  an axiom check or golden value disagrees with its expectation
//   2  usage error, malformed JSON or invalid input data
//   3  the instance is infeasible for the strategy (or the strategy does not apply)
//   4  unexpected internal error

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "retro/json_io.hpp"

namespace {

using namespace retro;

enum ExitCode { kOk = 0, kMismatch = 1, kMalformed = 2, kInfeasible = 3, kInternal = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InvalidArgument("cannot write '" + out_path + "'");
  out << content;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::optional<double> env_tolerance() {
  const char* v = std::getenv("RETRODICTOR_TOL");
  if (v == nullptr || *v == '\0') return std::nullopt;
  char* end = nullptr;
  const double tol = std::strtod(v, &end);
  if (end == v || *end != '\0' || !(tol > 0.0)) throw InvalidArgument("RETRODICTOR_TOL must be a positive number");
  return tol;
}

// Strategy given inline as JSON or as a path to a JSON file.
Strategy load_strategy(const std::string& spec) {
  const bool inline_json = spec.find('{') != std::string::npos;
  return strategy_from_json(parse_json(inline_json ? spec : read_file(spec)));
}

double default_tolerance(const Strategy& s) {
  if (const auto* a = std::get_if<AveragedPetz>(&s.variant()); a && a->measure.kind() == Measure::Kind::kJrsww)
    return 1e-6;
  return 1e-8;
}

InstanceSuite suite_for(std::uint64_t seed, int count) {
  InstanceSuite suite = InstanceSuite::defaults();
  suite.seeds.clear();
  for (int k = 0; k < count; ++k) suite.seeds.push_back(seed + static_cast<std::uint64_t>(k));
  return suite;
}

struct Options {
  std::string strategy;
  std::string in_path;
  std::string out_path;
  std::vector<std::string> axioms;
  std::uint64_t seed = 0;
  int count = 25;
  std::optional<double> tol;
  bool json = false;
  std::string experiment = "all";
};

int run_recover(const Options& o) {
  const Strategy s = load_strategy(o.strategy);
  const Instance inst = instance_from_json(parse_json(read_file(o.in_path)));
  emit(o.out_path, dump(to_json(evaluate(s, inst.alpha, inst.e))));
  return kOk;
}

int run_verify(const Options& o) {
  const Strategy s = load_strategy(o.strategy);
  const double tol = o.tol.value_or(env_tolerance().value_or(default_tolerance(s)));
  std::vector<Axiom> axioms;
  for (const auto& a : o.axioms) axioms.push_back(parse_axiom(a));
  if (axioms.empty()) axioms = all_axioms();
  const InstanceSet set = suite_for(o.seed, o.count).generate();

  bool ok = true;
  Json checks = Json::array();
  std::ostringstream text;
  for (Axiom a : axioms) {
    const AxiomCheck c = check_axiom(s, a, set, tol);
    ok = ok && c.verdict != AxiomCheck::Verdict::kFails;
    checks.push_back(to_json(c));
    text << std::left << std::setw(26) << axiom_label(a) << ' ';
    switch (c.verdict) {
      case AxiomCheck::Verdict::kHolds:
        text << "holds";
        break;
      case AxiomCheck::Verdict::kFails:
        text << "FAILS";
        break;
      case AxiomCheck::Verdict::kNotApplicable:
        text << "not applicable";
        break;
    }
    text << "  max deviation " << std::scientific << std::setprecision(3) << c.max_deviation << " (tol " << tol
         << ", " << c.checked << " checked, " << c.skipped << " skipped)" << std::defaultfloat << '\n';
    if (c.witness) text << "    witness: " << c.witness->label << '\n';
  }
  if (o.json) {
    emit(o.out_path, dump({{"schema_version", kSchemaVersion},
                           {"strategy", to_json(s)},
                           {"checks", std::move(checks)},
                           {"all_hold", ok}}));
  } else {
    text << "strategy " << s.name() << ": " << (ok ? "all checked axioms hold" : "some axioms fail") << '\n';
    emit(o.out_path, text.str());
  }
  return ok ? kOk : kMismatch;
}

int run_table(const Options& o) {
  std::vector<TableColumn> columns = standard_columns();
  if (const auto t = o.tol ? o.tol : env_tolerance())
    for (auto& c : columns) c.tolerance = *t;
  const TableReport r = build_table(columns, suite_for(o.seed, o.count));
  emit(o.out_path, o.json ? dump(to_json(r)) : render_table(r));
  return r.all_agree() ? kOk : kMismatch;
}

int run_reproduce(const Options& o) {
  const auto results = run_experiment(o.experiment);
  emit(o.out_path, o.json ? dump(to_json(results)) : format_results(results));
  for (const auto& r : results)
    if (!r.pass()) return kMismatch;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Retrodiction maps on finite-dimensional C*-algebras"};
  app.require_subcommand(1);
  Options o;

  auto* recover = app.add_subcommand("recover", "Print the recovery channel of an instance as JSON");
  recover->add_option("--strategy", o.strategy, "Strategy JSON, inline or as a file path")->required();
  recover->add_option("--in", o.in_path, "Instance JSON file")->required();
  recover->add_option("--out", o.out_path, "Write output to this file");
  recover->add_flag("--json", o.json, "Machine-readable output (always on for this verb)");

  auto* verify = app.add_subcommand("verify", "Check axioms for a strategy on the seeded instance suite");
  verify->add_option("--strategy", o.strategy, "Strategy JSON, inline or as a file path")->required();
  verify->add_option("--axiom", o.axioms, "Axiom token; repeatable (default: all)");
  verify->add_option("--seed", o.seed, "First suite seed");
  verify->add_option("--count", o.count, "Number of seeds per algebra")->check(CLI::PositiveNumber);
  verify->add_option("--tol", o.tol, "Tolerance (overrides RETRODICTOR_TOL)");
  verify->add_option("--out", o.out_path, "Write output to this file");
  verify->add_flag("--json", o.json, "Machine-readable output");

  auto* table = app.add_subcommand("table", "Property table for the six standard strategies");
  table->add_option("--seed", o.seed, "First suite seed");
  table->add_option("--count", o.count, "Number of seeds per algebra")->check(CLI::PositiveNumber);
  table->add_option("--tol", o.tol, "Tolerance for every column (overrides RETRODICTOR_TOL)");
  table->add_option("--out", o.out_path, "Write output to this file");
  table->add_flag("--json", o.json, "Machine-readable output");

  auto* reproduce = app.add_subcommand("reproduce", "Run worked examples against closed forms");
  reproduce->add_option("experiment", o.experiment, "appendix-b | appendix-c | appendix-d | involution | all")
      ->check(CLI::IsMember({"appendix-b", "appendix-c", "appendix-d", "involution", "all"}));
  reproduce->add_option("--out", o.out_path, "Write output to this file");
  reproduce->add_flag("--json", o.json, "Machine-readable output");

  auto* schema = app.add_subcommand("schema", "Print the JSON schemas");
  schema->add_option("--out", o.out_path, "Write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (*recover) return run_recover(o);
    if (*verify) return run_verify(o);
    if (*table) return run_table(o);
    if (*reproduce) return run_reproduce(o);
    if (*schema) {
      emit(o.out_path, dump(schemas()));
      return kOk;
    }
  } catch (const Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const Inapplicable& e) {
    std::cerr << "not applicable: " << e.what() << '\n';
    return kInfeasible;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMalformed;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kMalformed;
}
