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

#include <json.hpp>
#include <string>
#include <vector>

#include "retro/axioms.hpp"
#include "retro/experiments.hpp"

namespace retro {

using Json = nlohmann::json;

/// Version stamped into every top-level document.
inline constexpr int kSchemaVersion = 1;

// Complex matrices are arrays of rows; each entry is a [re, im] pair or a
// bare real number.
// Malformed input throws InvalidArgument.

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"blocks": [m0, m1, ...]}
Json to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j);

/// {"algebra": {...}, "blocks": [matrix, ...]}
Json to_json(const Element& e);
Element element_from_json(const Json& j);

/// Element fields plus {"floor": f}.
Json to_json(const FaithfulState& s);
FaithfulState state_from_json(const Json& j);

/// {"source", "target", "matrix"} in block-by-block column-stacking order.
/// On input {"source", "target", "kraus": [matrix, ...]} is also accepted.
Json to_json(const Channel& c);
Channel channel_from_json(const Json& j);

/// {"kind": "dirac", "t"} | {"kind": "discrete", "points": [{"t", "weight"}]}
/// | {"kind": "jrsww", "nodes"}
Json to_json(const Measure& m);
Measure measure_from_json(const Json& j);

/// {"kind": "petz" | "rotated" | "averaged" | "jrsww" | "sth" |
/// "discard_prepare" | "bayes" | "ss" | "convex", ...}. Custom strategies
/// have no JSON form.
Json to_json(const Strategy& s);
Strategy strategy_from_json(const Json& j);

Json to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

Json to_json(const AxiomCheck& c);
Json to_json(const TableReport& r);
Json to_json(const GoldenResult& g);
Json to_json(const std::vector<GoldenResult>& results);

/// JSON Schema (draft 2020-12) for all document types.
Json schemas();

/// Parses text, rethrowing syntax errors as InvalidArgument.
Json parse_json(const std::string& text);

}  // namespace retro
