// Copyright 2026 The k3lat Authors
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

#include <string>

#include "doctest.h"
#include "k3lat/catalog.hpp"
#include "k3lat/config_io.hpp"
#include "k3lat/curve_graph.hpp"
#include "k3lat/errors.hpp"

using namespace k3lat;

namespace {

const std::string kData = K3LAT_TEST_DATA_DIR;

std::string parse_error_where(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ParseError& e) {
    return e.where();
  }
  return "";
}

}  // namespace

TEST_CASE("minimal file") {
  const auto f = parse_config(read_file(kData + "/examples/minimal.json"));
  CHECK(f.name == "single-line");
  REQUIRE(f.config.size() == 1);
  CHECK(f.config.vertex(0).square == -2);
  CHECK(f.config.edges().empty());
}

TEST_CASE("duplicate vertex id") {
  CHECK_THROWS_AS(parse_config(read_file(kData + "/examples/duplicate-id.json")), ValidationError);
}

TEST_CASE("catalog config parses with expected vertex count") {
  const auto j = parse_json(read_file(kData + "/catalog/example-D6tilde.json"));
  const auto f = config_from_json(j);
  CHECK(f.config.size() == 10);
  CHECK(classify(f.config).kind == LatticeKind::Hyperbolic);
}

TEST_CASE("syntax errors carry line and column") {
  CHECK(parse_error_where(read_file(kData + "/examples/malformed.json")).rfind("line 4, column", 0) == 0);
  CHECK(parse_error_where("{\"name\": \"x\",\n\"vertices\": [}").rfind("line 2", 0) == 0);
}

TEST_CASE("schema errors carry a JSON pointer") {
  CHECK(parse_error_where(R"({"name": "x", "vertices": [], "colour": 1})") == "/colour");
  CHECK(parse_error_where(R"({"name": "x", "vertices": [{"id": "a", "square": "two"}]})") ==
        "/vertices/0/square");
  CHECK(parse_error_where(R"({"vertices": []})") == "/name");
  CHECK(parse_error_where(R"({"name": "x", "vertices": [{"id": "a", "square": -2}], "edges": [{"a": "a"}]})") ==
        "/edges/0/b");
}

TEST_CASE("validation errors") {
  const std::string two = R"({"name": "x", "vertices": [{"id": "a", "square": -2}, {"id": "b", "square": -2}], )";
  CHECK_THROWS_AS(parse_config(two + R"("edges": [{"a": "a", "b": "c"}]})"), ValidationError);
  CHECK_THROWS_AS(parse_config(two + R"("edges": [{"a": "a", "b": "b"}, {"a": "b", "b": "a"}]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_config(two + R"("edges": [{"a": "a", "b": "b", "mult": 0}]})"), ValidationError);
  CHECK_THROWS_AS(parse_config(R"({"name": "x", "vertices": [{"id": "a", "square": -4}]})"), ValidationError);
}

TEST_CASE("round trip is a fixed point") {
  for (const auto& e : load_catalog(kData + "/catalog")) {
    if (e.kind != "config") continue;
    CAPTURE(e.name);
    const auto f = config_from_json(e.data);
    const auto text = serialize_config(f);
    const auto g = parse_config(text);
    CHECK(g == f);
    CHECK(serialize_config(g) == text);
  }
}

TEST_CASE("profiles") {
  const auto p = parse_profile(read_file(kData + "/examples/profile-6xI4.json"));
  CHECK(p.fibers.size() == 6);
  CHECK(p.characteristic == 0);
  const auto j = profile_to_json(p);
  CHECK(j["fibers"].size() == 1);
  CHECK(j["fibers"][0]["count"] == 6);
  CHECK(profile_from_json(j).fiber_names() == p.fiber_names());
  try {
    parse_profile(R"({"fibers": [{"type": "I4"}, {"type": "V"}]})");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.where() == "/fibers/1/type");
  }
  CHECK_THROWS_AS(parse_profile(R"({"fibers": [{"type": "I4", "count": -1}]})"), ValidationError);
}

TEST_CASE("models") {
  const auto m = parse_model(read_file(kData + "/examples/model-quartic.json"));
  CHECK(m.h_square == 4);
  REQUIRE(m.curves.size() == 2);
  CHECK(m.curves[1].pa == 1);
  CHECK(m.curves[1].h_dot == 3);
  CHECK_THROWS_AS(parse_model(R"({"H_square": 3, "curves": []})"), ValidationError);
  CHECK_THROWS_AS(parse_model(R"({"H_square": 4, "curves": [{"label": "c", "pa": -1, "H_dot": 1}]})"),
                  ValidationError);
}

TEST_CASE("catalog loads sorted and verifies") {
  const auto entries = load_catalog(kData + "/catalog");
  CHECK(entries.size() >= 20);
  for (std::size_t i = 1; i < entries.size(); ++i) CHECK(entries[i - 1].name < entries[i].name);
  for (const auto& e : entries) {
    CAPTURE(e.name);
    const auto r = verify_entry(e);
    CHECK(r.pass);
    CHECK(r.mismatches.empty());
  }
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(read_file(kData + "/examples/no-such-file.json"), ParseError);
}
