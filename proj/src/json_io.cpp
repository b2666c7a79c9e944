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

#include "retro/json_io.hpp"

namespace retro {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InvalidArgument(std::string("expected an object with field '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw InvalidArgument(std::string("missing field '") + key + "'");
  return *it;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw InvalidArgument(std::string(what) + " must be a number");
  return j.get<double>();
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidArgument(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string text(const Json& j, const char* what) {
  if (!j.is_string()) throw InvalidArgument(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InvalidArgument("complex entries must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Matrix> matrices_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidArgument(std::string(what) + " must be an array of matrices");
  std::vector<Matrix> out;
  for (const auto& m : j) out.push_back(matrix_from_json(m));
  return out;
}

const char* verdict_token(AxiomCheck::Verdict v) {
  switch (v) {
    case AxiomCheck::Verdict::kHolds:
      return "holds";
    case AxiomCheck::Verdict::kFails:
      return "fails";
    case AxiomCheck::Verdict::kNotApplicable:
      return "not_applicable";
  }
  return "unknown";
}

const char* expectation_token(Expectation e) {
  switch (e) {
    case Expectation::kHolds:
      return "holds";
    case Expectation::kFails:
      return "fails";
    case Expectation::kUndetermined:
      return "undetermined";
  }
  return "unknown";
}

}  // namespace

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("matrix must be an array of rows");
  const auto rows = static_cast<int>(j.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(j[0].is_array() ? j[0].size() : 0);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) throw InvalidArgument("matrix rows must have equal length");
    for (int k = 0; k < cols; ++k) m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

Json to_json(const Algebra& a) { return {{"blocks", a.block_dims()}}; }

Algebra algebra_from_json(const Json& j) {
  const Json& b = field(j, "blocks");
  if (!b.is_array() || b.empty()) throw InvalidArgument("algebra blocks must be a non-empty array");
  std::vector<int> dims;
  for (const auto& d : b) {
    const int m = integer(d, "block dimension");
    if (m < 1) throw InvalidArgument("block dimensions must be positive");
    dims.push_back(m);
  }
  return Algebra(std::move(dims));
}

Json to_json(const Element& e) {
  Json blocks = Json::array();
  for (const auto& b : e.blocks()) blocks.push_back(to_json(b));
  return {{"algebra", to_json(e.algebra())}, {"blocks", std::move(blocks)}};
}

Element element_from_json(const Json& j) {
  return Element(algebra_from_json(field(j, "algebra")), matrices_from_json(field(j, "blocks"), "element blocks"));
}

Json to_json(const FaithfulState& s) {
  Json j = to_json(s.element());
  j["floor"] = s.floor();
  return j;
}

FaithfulState state_from_json(const Json& j) {
  const double floor = j.contains("floor") ? number(j["floor"], "floor") : FaithfulState::kDefaultFloor;
  return FaithfulState(element_from_json(j), floor);
}

Json to_json(const Channel& c) {
  return {{"source", to_json(c.source())}, {"target", to_json(c.target())}, {"matrix", to_json(c.matrix())}};
}

Channel channel_from_json(const Json& j) {
  const Algebra source = algebra_from_json(field(j, "source"));
  const Algebra target = algebra_from_json(field(j, "target"));
  if (j.contains("kraus")) return Channel::from_kraus(source, target, matrices_from_json(j["kraus"], "kraus"));
  return Channel(source, target, matrix_from_json(field(j, "matrix")));
}

Json to_json(const Measure& m) {
  switch (m.kind()) {
    case Measure::Kind::kDirac:
      return {{"kind", "dirac"}, {"t", m.nodes().front().t}};
    case Measure::Kind::kDiscrete: {
      Json pts = Json::array();
      for (const auto& p : m.nodes()) pts.push_back({{"t", p.t}, {"weight", p.weight}});
      return {{"kind", "discrete"}, {"points", std::move(pts)}};
    }
    case Measure::Kind::kJrsww:
      return {{"kind", "jrsww"}, {"nodes", m.jrsww_nodes()}};
  }
  throw InvalidArgument("unknown measure kind");
}

Measure measure_from_json(const Json& j) {
  const std::string kind = text(field(j, "kind"), "measure kind");
  if (kind == "dirac") return Measure::dirac(number(field(j, "t"), "t"));
  if (kind == "jrsww")
    return Measure::jrsww(j.contains("nodes") ? integer(j["nodes"], "nodes") : Measure::kDefaultJrswwNodes);
  if (kind == "discrete") {
    const Json& pts = field(j, "points");
    if (!pts.is_array()) throw InvalidArgument("points must be an array");
    std::vector<WeightedPoint> points;
    for (const auto& p : pts) points.push_back({number(field(p, "t"), "t"), number(field(p, "weight"), "weight")});
    return Measure::discrete(std::move(points));
  }
  throw InvalidArgument("unknown measure kind '" + kind + "'");
}

Json to_json(const Strategy& s) {
  struct Visitor {
    Json operator()(const Petz&) const { return {{"kind", "petz"}}; }
    Json operator()(const RotatedPetz& r) const { return {{"kind", "rotated"}, {"t", r.t}}; }
    Json operator()(const AveragedPetz& a) const { return {{"kind", "averaged"}, {"measure", to_json(a.measure)}}; }
    Json operator()(const Sth& st) const {
      Json entries = Json::array();
      for (const auto& [state, u] : st.unitaries.entries)
        entries.push_back({{"state", to_json(state)}, {"unitary", to_json(u)}});
      return {{"kind", "sth"},
              {"unitaries",
               {{"gain", st.unitaries.gain}, {"match_tol", st.unitaries.match_tol}, {"entries", std::move(entries)}}}};
    }
    Json operator()(const DiscardPrepare&) const { return {{"kind", "discard_prepare"}}; }
    Json operator()(const Bayes&) const { return {{"kind", "bayes"}}; }
    Json operator()(const SuraceScandi&) const { return {{"kind", "ss"}}; }
    Json operator()(const Convex& c) const {
      Json terms = Json::array();
      for (const auto& t : c.terms) terms.push_back({{"weight", t.weight}, {"strategy", to_json(t.strategy)}});
      return {{"kind", "convex"}, {"terms", std::move(terms)}};
    }
    Json operator()(const CustomStrategy& c) const {
      throw InvalidArgument("custom strategy '" + c.name + "' has no JSON form");
    }
  };
  return std::visit(Visitor{}, s.variant());
}

Strategy strategy_from_json(const Json& j) {
  const std::string kind = text(field(j, "kind"), "strategy kind");
  if (kind == "petz") return Strategy::petz();
  if (kind == "rotated") return Strategy::rotated(number(field(j, "t"), "t"));
  if (kind == "averaged") return Strategy::averaged(measure_from_json(field(j, "measure")));
  if (kind == "jrsww")
    return Strategy::jrsww(j.contains("nodes") ? integer(j["nodes"], "nodes") : Measure::kDefaultJrswwNodes);
  if (kind == "discard_prepare") return Strategy::discard_prepare();
  if (kind == "bayes") return Strategy::bayes();
  if (kind == "ss") return Strategy::surace_scandi();
  if (kind == "sth") {
    UnitaryAssignment u;
    if (j.contains("unitaries")) {
      const Json& uj = j["unitaries"];
      if (!uj.is_object()) throw InvalidArgument("unitaries must be an object");
      if (uj.contains("gain")) u.gain = number(uj["gain"], "gain");
      if (uj.contains("match_tol")) u.match_tol = number(uj["match_tol"], "match_tol");
      if (uj.contains("entries")) {
        if (!uj["entries"].is_array()) throw InvalidArgument("entries must be an array");
        for (const auto& e : uj["entries"])
          u.entries.emplace_back(element_from_json(field(e, "state")), element_from_json(field(e, "unitary")));
      }
    }
    return Strategy::sth(std::move(u));
  }
  if (kind == "convex") {
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw InvalidArgument("terms must be an array");
    std::vector<ConvexTerm> out;
    for (const auto& t : terms)
      out.push_back({number(field(t, "weight"), "weight"), strategy_from_json(field(t, "strategy"))});
    return Strategy::convex(std::move(out));
  }
  throw InvalidArgument("unknown strategy kind '" + kind + "'");
}

Json to_json(const Instance& inst) {
  Json j{{"label", inst.label}, {"alpha", to_json(inst.alpha)}, {"e", to_json(inst.e)}, {"covariant", inst.covariant}};
  if (inst.f) j["f"] = to_json(*inst.f);
  if (inst.alpha2) j["alpha2"] = to_json(*inst.alpha2);
  if (inst.e2) j["e2"] = to_json(*inst.e2);
  return j;
}

Instance instance_from_json(const Json& j) {
  Instance inst{j.contains("label") ? text(j["label"], "label") : std::string("instance"),
                state_from_json(field(j, "alpha")), channel_from_json(field(j, "e")), {}, {}, {}, false};
  if (j.contains("f")) inst.f = channel_from_json(j["f"]);
  if (j.contains("alpha2")) inst.alpha2 = state_from_json(j["alpha2"]);
  if (j.contains("e2")) inst.e2 = channel_from_json(j["e2"]);
  if (j.contains("covariant")) {
    if (!j["covariant"].is_boolean()) throw InvalidArgument("covariant must be a boolean");
    inst.covariant = j["covariant"].get<bool>();
  }
  return inst;
}

Json to_json(const AxiomCheck& c) {
  Json j{{"axiom", axiom_token(c.axiom)},
         {"strategy", c.strategy},
         {"verdict", verdict_token(c.verdict)},
         {"max_deviation", c.max_deviation},
         {"tolerance", c.tolerance},
         {"checked", c.checked},
         {"skipped", c.skipped}};
  if (c.witness) j["witness"] = to_json(*c.witness);
  return j;
}

Json to_json(const TableReport& r) {
  Json rows = Json::array();
  for (Axiom a : r.rows) rows.push_back(axiom_token(a));
  Json cells = Json::array();
  for (const auto& c : r.cells) {
    Json cell{{"column", c.column},
              {"axiom", axiom_token(c.axiom)},
              {"expected", expectation_token(c.expected)},
              {"verdict", c.expected == Expectation::kUndetermined ? "observed" : verdict_token(c.check.verdict)},
              {"observed", verdict_token(c.check.verdict)},
              {"max_deviation", c.check.max_deviation},
              {"tolerance", c.check.tolerance},
              {"checked", c.check.checked},
              {"skipped", c.check.skipped},
              {"agrees", c.agrees}};
    if (c.check.witness) cell["witness"] = c.check.witness->label;
    cells.push_back(std::move(cell));
  }
  return {{"schema_version", kSchemaVersion}, {"columns", r.columns}, {"rows", std::move(rows)},
          {"cells", std::move(cells)},        {"all_agree", r.all_agree()}};
}

Json to_json(const GoldenResult& g) {
  return {{"name", g.name},           {"computed", to_json(g.computed)}, {"expected", to_json(g.expected)},
          {"deviation", g.deviation()}, {"tolerance", g.tolerance},     {"pass", g.pass()},
          {"provenance", g.provenance}};
}

Json to_json(const std::vector<GoldenResult>& results) {
  Json arr = Json::array();
  bool all = true;
  for (const auto& g : results) {
    arr.push_back(to_json(g));
    all = all && g.pass();
  }
  return {{"schema_version", kSchemaVersion}, {"results", std::move(arr)}, {"all_pass", all}};
}

Json parse_json(const std::string& input) {
  try {
    return Json::parse(input);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

Json schemas() {
  const Json complex = {{"type", "array"}, {"items", {{"type", "number"}}}, {"minItems", 2}, {"maxItems", 2}};
  const Json matrix = {{"type", "array"}, {"items", {{"type", "array"}, {"items", {{"$ref", "#/$defs/complex"}}}}}};
  const Json algebra = {{"type", "object"},
                        {"required", {"blocks"}},
                        {"properties",
                         {{"blocks", {{"type", "array"}, {"minItems", 1}, {"items", {{"type", "integer"}, {"minimum", 1}}}}}}}};
  const Json element = {
      {"type", "object"},
      {"required", {"algebra", "blocks"}},
      {"properties",
       {{"algebra", {{"$ref", "#/$defs/algebra"}}}, {"blocks", {{"type", "array"}, {"items", {{"$ref", "#/$defs/matrix"}}}}}}}};
  const Json state = {{"allOf", {{{"$ref", "#/$defs/element"}}}},
                      {"properties", {{"floor", {{"type", "number"}, {"exclusiveMinimum", 0}}}}}};
  const Json channel = {
      {"type", "object"},
      {"required", {"source", "target"}},
      {"properties",
       {{"source", {{"$ref", "#/$defs/algebra"}}},
        {"target", {{"$ref", "#/$defs/algebra"}}},
        {"matrix", {{"$ref", "#/$defs/matrix"}}},
        {"kraus", {{"type", "array"}, {"items", {{"$ref", "#/$defs/matrix"}}}}}}},
      {"oneOf", {{{"required", {"matrix"}}}, {{"required", {"kraus"}}}}}};
  const Json measure = {
      {"type", "object"},
      {"required", {"kind"}},
      {"properties",
       {{"kind", {{"enum", {"dirac", "discrete", "jrsww"}}}},
        {"t", {{"type", "number"}}},
        {"nodes", {{"type", "integer"}, {"minimum", 2}}},
        {"points",
         {{"type", "array"},
          {"items",
           {{"type", "object"},
            {"required", {"t", "weight"}},
            {"properties", {{"t", {{"type", "number"}}}, {"weight", {{"type", "number"}, {"exclusiveMinimum", 0}}}}}}}}}}}};
  const Json strategy = {
      {"type", "object"},
      {"required", {"kind"}},
      {"properties",
       {{"kind", {{"enum", {"petz", "rotated", "averaged", "jrsww", "sth", "discard_prepare", "bayes", "ss", "convex"}}}},
        {"t", {{"type", "number"}}},
        {"nodes", {{"type", "integer"}}},
        {"measure", {{"$ref", "#/$defs/measure"}}},
        {"unitaries",
         {{"type", "object"},
          {"properties",
           {{"gain", {{"type", "number"}}},
            {"match_tol", {{"type", "number"}}},
            {"entries",
             {{"type", "array"},
              {"items",
               {{"type", "object"},
                {"required", {"state", "unitary"}},
                {"properties",
                 {{"state", {{"$ref", "#/$defs/element"}}}, {"unitary", {{"$ref", "#/$defs/element"}}}}}}}}}}}}},
        {"terms",
         {{"type", "array"},
          {"items",
           {{"type", "object"},
            {"required", {"weight", "strategy"}},
            {"properties", {{"weight", {{"type", "number"}}}, {"strategy", {{"$ref", "#/$defs/strategy"}}}}}}}}}}}};
  const Json instance = {{"type", "object"},
                         {"required", {"alpha", "e"}},
                         {"properties",
                          {{"label", {{"type", "string"}}},
                           {"alpha", {{"$ref", "#/$defs/state"}}},
                           {"e", {{"$ref", "#/$defs/channel"}}},
                           {"f", {{"$ref", "#/$defs/channel"}}},
                           {"alpha2", {{"$ref", "#/$defs/state"}}},
                           {"e2", {{"$ref", "#/$defs/channel"}}},
                           {"covariant", {{"type", "boolean"}}}}}};
  const Json verdict = {{"enum", {"holds", "fails", "not_applicable", "observed"}}};
  const Json axiom_check = {
      {"type", "object"},
      {"required", {"axiom", "strategy", "verdict", "max_deviation", "tolerance"}},
      {"properties",
       {{"axiom", {{"type", "string"}}},
        {"strategy", {{"type", "string"}}},
        {"verdict", {{"$ref", "#/$defs/verdict"}}},
        {"max_deviation", {{"type", {"number", "null"}}}},
        {"tolerance", {{"type", "number"}}},
        {"checked", {{"type", "integer"}}},
        {"skipped", {{"type", "integer"}}},
        {"witness", {{"$ref", "#/$defs/instance"}}}}}};
  const Json table = {{"type", "object"},
                      {"required", {"schema_version", "columns", "rows", "cells", "all_agree"}},
                      {"properties",
                       {{"schema_version", {{"const", kSchemaVersion}}},
                        {"columns", {{"type", "array"}, {"items", {{"type", "string"}}}}},
                        {"rows", {{"type", "array"}, {"items", {{"type", "string"}}}}},
                        {"cells", {{"type", "array"}, {"items", {{"type", "object"}}}}},
                        {"all_agree", {{"type", "boolean"}}}}}};
  const Json golden = {{"type", "object"},
                       {"required", {"name", "computed", "expected", "deviation", "pass"}},
                       {"properties",
                        {{"name", {{"type", "string"}}},
                         {"computed", {{"$ref", "#/$defs/matrix"}}},
                         {"expected", {{"$ref", "#/$defs/matrix"}}},
                         {"deviation", {{"type", {"number", "null"}}}},
                         {"tolerance", {{"type", "number"}}},
                         {"pass", {{"type", "boolean"}}},
                         {"provenance", {{"type", "string"}}}}}};
  const Json golden_report = {{"type", "object"},
                              {"required", {"schema_version", "results", "all_pass"}},
                              {"properties",
                               {{"schema_version", {{"const", kSchemaVersion}}},
                                {"results", {{"type", "array"}, {"items", {{"$ref", "#/$defs/golden_result"}}}}},
                                {"all_pass", {{"type", "boolean"}}}}}};
  return {{"$schema", "https://json-schema.org/draft/2020-12/schema"},
          {"schema_version", kSchemaVersion},
          {"$defs",
           {{"complex", complex},
            {"matrix", matrix},
            {"algebra", algebra},
            {"element", element},
            {"state", state},
            {"channel", channel},
            {"measure", measure},
            {"strategy", strategy},
            {"instance", instance},
            {"verdict", verdict},
            {"axiom_check", axiom_check},
            {"table_report", table},
            {"golden_result", golden},
            {"golden_report", golden_report}}}};
}

}  // namespace retro
