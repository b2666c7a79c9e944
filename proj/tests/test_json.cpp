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

#include <doctest.h>

#include "retro/json_io.hpp"
#include "retro/random.hpp"

using namespace retro;

namespace {

Channel reload(const Channel& c) { return channel_from_json(parse_json(to_json(c).dump())); }

}  // namespace

TEST_SUITE("json") {
  TEST_CASE("matrices and algebras round trip bit for bit") {
    Matrix m(2, 3);
    m << Complex(0.1, -1e-300), Complex(1.0 / 3.0, 2.0), Complex(-7.25, 0.0), Complex(1e17, 3.0),
        Complex(std::nextafter(1.0, 2.0), 0.0), Complex(0.0, -0.0);
    const Matrix back = matrix_from_json(parse_json(to_json(m).dump()));
    CHECK((back - m).norm() == 0.0);
    const Algebra a({2, 1, 3});
    CHECK(algebra_from_json(parse_json(to_json(a).dump())) == a);
  }

  TEST_CASE("states and channels round trip") {
    const Algebra a({2, 1});
    const FaithfulState s = random_faithful_state(a, 1e-3, 11);
    const FaithfulState s2 = state_from_json(parse_json(to_json(s).dump()));
    CHECK(approx_equal(s.element(), s2.element(), 0.0));
    const Channel c = random_channel(a, Algebra({3}), 2, 5);
    const Channel c2 = reload(c);
    CHECK(c2.source() == c.source());
    CHECK(c2.target() == c.target());
    CHECK(deviation(c, c2) == 0.0);
  }

  TEST_CASE("channels from Kraus operators") {
    const Json j = parse_json(R"({"source": {"blocks": [2]}, "target": {"blocks": [2]},
      "kraus": [[[[0,0],[1,0]],[[1,0],[0,0]]]]})");
    const Channel c = channel_from_json(j);
    CHECK(approx_equal(c, Channel::ad(pauli_x()), 1e-15));
  }

  TEST_CASE("strategies round trip") {
    const std::vector<Strategy> all{Strategy::petz(),
                                    Strategy::rotated(0.3),
                                    Strategy::averaged(Measure::discrete({{0.5, 0.25}, {-0.5, 0.75}})),
                                    Strategy::jrsww(32),
                                    Strategy::sth(),
                                    Strategy::discard_prepare(),
                                    Strategy::bayes(),
                                    Strategy::surace_scandi(),
                                    symmetric_rotated(0.5)};
    for (const auto& s : all) {
      const Json j = to_json(s);
      CHECK(to_json(strategy_from_json(parse_json(j.dump()))) == j);
    }
    const Strategy custom = CustomStrategy{"c", [](const FaithfulState&, const Channel& e) { return e; }};
    CHECK_THROWS_AS(to_json(custom), InvalidArgument);
  }

  TEST_CASE("recovered channels reload within 1e-12") {
    const Algebra a({2, 1});
    const FaithfulState alpha = random_faithful_state(a, 1e-2, 3);
    const Channel e = random_channel(a, Algebra({2}), 2, 4);
    for (const Strategy& s : {Strategy::petz(), Strategy::rotated(0.4), Strategy::jrsww()}) {
      const Channel r = evaluate(s, alpha, e);
      CHECK(deviation(r, reload(r)) <= 1e-12);
    }
  }

  TEST_CASE("instances round trip") {
    const InstanceSet set = fixed_instances();
    for (const auto* group : {&set.singles, &set.composables, &set.tensors}) {
      for (const auto& i : *group) {
        const Instance back = instance_from_json(parse_json(to_json(i).dump()));
        CHECK(back.label == i.label);
        CHECK(deviation(back.e, i.e) == 0.0);
        CHECK(back.f.has_value() == i.f.has_value());
        CHECK(back.e2.has_value() == i.e2.has_value());
      }
    }
  }

  TEST_CASE("malformed input throws InvalidArgument") {
    CHECK_THROWS_AS(parse_json("{not json"), InvalidArgument);
    CHECK_THROWS_AS(matrix_from_json(parse_json(R"([["a", [1, 0]]])")), InvalidArgument);
    CHECK(matrix_from_json(parse_json("[[1, 2]]"))(0, 1) == Complex(2.0, 0.0));
    CHECK_THROWS_AS(matrix_from_json(parse_json("[[[1, 0]], [[1, 0], [0, 0]]]")), InvalidArgument);
    CHECK_THROWS_AS(algebra_from_json(parse_json(R"({"blocks": [0]})")), InvalidArgument);
    CHECK_THROWS_AS(strategy_from_json(parse_json(R"({"kind": "oracle"})")), InvalidArgument);
    CHECK_THROWS_AS(strategy_from_json(parse_json(R"({"kind": "rotated"})")), InvalidArgument);
    CHECK_THROWS_AS(channel_from_json(parse_json(R"({"source": {"blocks": [2]}})")), InvalidArgument);
    CHECK_THROWS_AS(measure_from_json(parse_json(R"({"kind": "discrete", "points": [{"t": 0, "weight": -1}]})")),
                    InvalidArgument);
  }

  TEST_CASE("reports carry a schema version") {
    CHECK(to_json(surace_scandi_counterexample())["schema_version"] == kSchemaVersion);
    const Json s = schemas();
    CHECK(s.contains("$defs"));
    for (const char* k : {"matrix", "algebra", "state", "channel", "strategy", "instance"})
      CHECK(s["$defs"].contains(k));
  }
}
