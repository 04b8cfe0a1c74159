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

#include "k3lat/config_io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "k3lat/errors.hpp"

namespace k3lat {

namespace {

const std::set<std::string> kCatalogKeys = {"kind", "description", "expected"};

std::string pointer(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string pointer(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

void check_keys(const Json& j, const std::string& where, const std::set<std::string>& allowed) {
  if (!j.is_object()) throw ParseError(where.empty() ? "/" : where, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()) && !kCatalogKeys.count(it.key()))
      throw ParseError(pointer(where, it.key()), "unknown field");
}

const Json& field(const Json& j, const std::string& where, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(pointer(where, key), "missing field");
  return *it;
}

long as_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where, "expected an integer");
  const auto x = v.get<long long>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    throw ParseError(where, "integer out of range");
  return static_cast<long>(x);
}

std::string as_string(const Json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where, "expected a string");
  return v.get<std::string>();
}

bool as_bool(const Json& v, const std::string& where) {
  if (!v.is_boolean()) throw ParseError(where, "expected a boolean");
  return v.get<bool>();
}

const Json& as_array(const Json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where, "expected an array");
  return v;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column),
                     "invalid JSON");
  }
}

ConfigFile config_from_json(const Json& j) {
  check_keys(j, "", {"name", "vertices", "edges", "metadata"});
  ConfigFile f;
  f.name = as_string(field(j, "", "name"), "/name");
  const auto& verts = as_array(field(j, "", "vertices"), "/vertices");
  std::vector<CurveVertex> vs;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::string w = pointer("/vertices", i);
    check_keys(verts[i], w, {"id", "square", "degree"});
    CurveVertex v;
    v.id = as_string(field(verts[i], w, "id"), pointer(w, "id"));
    v.square = static_cast<int>(as_int(field(verts[i], w, "square"), pointer(w, "square")));
    if (verts[i].contains("degree"))
      v.degree = static_cast<int>(as_int(verts[i]["degree"], pointer(w, "degree")));
    vs.push_back(std::move(v));
  }
  f.config = CurveConfig(std::move(vs));
  if (j.contains("edges")) {
    const auto& edges = as_array(j["edges"], "/edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string w = pointer("/edges", i);
      check_keys(edges[i], w, {"a", "b", "mult"});
      const auto a = as_string(field(edges[i], w, "a"), pointer(w, "a"));
      const auto b = as_string(field(edges[i], w, "b"), pointer(w, "b"));
      const long mult = edges[i].contains("mult") ? as_int(edges[i]["mult"], pointer(w, "mult")) : 1;
      if (mult < 1) throw ValidationError(w + ": edge multiplicity must be >= 1");
      if (!f.config.index_of(a)) throw ValidationError(w + ": unknown vertex '" + a + "'");
      if (!f.config.index_of(b)) throw ValidationError(w + ": unknown vertex '" + b + "'");
      if (f.config.multiplicity(*f.config.index_of(a), *f.config.index_of(b)) != 0 && a != b)
        throw ValidationError(w + ": duplicate edge " + a + "-" + b);
      f.config.set_edge(a, b, static_cast<int>(mult));
    }
  }
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) throw ParseError("/metadata", "expected an object");
    f.metadata = j["metadata"];
  }
  return f;
}

ConfigFile parse_config(const std::string& text) { return config_from_json(parse_json(text)); }

Json config_to_json(const ConfigFile& file) {
  Json j = Json::object();
  j["name"] = file.name;
  Json verts = Json::array();
  for (const auto& v : file.config.vertices())
    verts.push_back({{"id", v.id}, {"square", v.square}, {"degree", v.degree}});
  j["vertices"] = std::move(verts);
  Json edges = Json::array();
  for (const auto& [e, m] : file.config.edges())
    edges.push_back({{"a", file.config.vertex(e.first).id},
                     {"b", file.config.vertex(e.second).id},
                     {"mult", m}});
  j["edges"] = std::move(edges);
  j["metadata"] = file.metadata;
  return j;
}

std::string serialize_config(const ConfigFile& file) {
  // Field order is fixed by hand; nlohmann objects sort keys alphabetically.
  const Json j = config_to_json(file);
  std::ostringstream os;
  os << "{\n  \"name\": " << j["name"].dump() << ",\n  \"vertices\": [";
  const auto& verts = j["vertices"];
  for (std::size_t i = 0; i < verts.size(); ++i)
    os << (i ? ",\n    " : "\n    ") << "{\"id\": " << verts[i]["id"].dump()
       << ", \"square\": " << verts[i]["square"].dump() << ", \"degree\": " << verts[i]["degree"].dump()
       << "}";
  os << (verts.empty() ? "]" : "\n  ]") << ",\n  \"edges\": [";
  const auto& edges = j["edges"];
  for (std::size_t i = 0; i < edges.size(); ++i)
    os << (i ? ",\n    " : "\n    ") << "{\"a\": " << edges[i]["a"].dump() << ", \"b\": "
       << edges[i]["b"].dump() << ", \"mult\": " << edges[i]["mult"].dump() << "}";
  os << (edges.empty() ? "]" : "\n  ]") << ",\n  \"metadata\": " << j["metadata"].dump() << "\n}\n";
  return os.str();
}

FibrationProfile profile_from_json(const Json& j) {
  check_keys(j, "", {"name", "quasi_elliptic", "characteristic", "fibers"});
  FibrationProfile p;
  if (j.contains("quasi_elliptic")) p.quasi_elliptic = as_bool(j["quasi_elliptic"], "/quasi_elliptic");
  if (j.contains("characteristic"))
    p.characteristic = static_cast<int>(as_int(j["characteristic"], "/characteristic"));
  const auto& fibers = as_array(field(j, "", "fibers"), "/fibers");
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    const std::string w = pointer("/fibers", i);
    check_keys(fibers[i], w, {"type", "count", "delta"});
    KodairaType t;
    try {
      t = parse_kodaira_type(as_string(field(fibers[i], w, "type"), pointer(w, "type")));
    } catch (const std::invalid_argument& e) {
      throw ParseError(pointer(w, "type"), e.what());
    }
    const long count = fibers[i].contains("count") ? as_int(fibers[i]["count"], pointer(w, "count")) : 1;
    const long delta = fibers[i].contains("delta") ? as_int(fibers[i]["delta"], pointer(w, "delta")) : 0;
    if (count < 0 || count > 1000) throw ValidationError(w + ": count must lie in 0..1000");
    p.add(t, static_cast<int>(count), static_cast<int>(delta));
  }
  validate_profile(p);
  return p;
}

FibrationProfile parse_profile(const std::string& text) { return profile_from_json(parse_json(text)); }

Json profile_to_json(const FibrationProfile& profile) {
  Json fibers = Json::array();
  for (const auto& f : profile.fibers) {
    if (!fibers.empty() && fibers.back()["type"] == f.type.name() && fibers.back()["delta"] == f.delta) {
      fibers.back()["count"] = fibers.back()["count"].get<int>() + 1;
      continue;
    }
    fibers.push_back({{"type", f.type.name()}, {"count", 1}, {"delta", f.delta}});
  }
  return {{"quasi_elliptic", profile.quasi_elliptic},
          {"characteristic", profile.characteristic},
          {"fibers", std::move(fibers)}};
}

DeclaredModel model_from_json(const Json& j) {
  check_keys(j, "", {"name", "H_square", "H_two_divisible", "curves"});
  DeclaredModel m;
  m.h_square = as_int(field(j, "", "H_square"), "/H_square");
  if (m.h_square <= 0 || m.h_square % 2 != 0)
    throw ValidationError("/H_square: must be even and positive");
  if (j.contains("H_two_divisible")) m.h_two_divisible = as_bool(j["H_two_divisible"], "/H_two_divisible");
  const auto& curves = as_array(field(j, "", "curves"), "/curves");
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const std::string w = pointer("/curves", i);
    check_keys(curves[i], w, {"label", "pa", "H_dot"});
    DeclaredCurve c;
    c.label = as_string(field(curves[i], w, "label"), pointer(w, "label"));
    c.pa = static_cast<int>(as_int(field(curves[i], w, "pa"), pointer(w, "pa")));
    if (c.pa < 0) throw ValidationError(w + ": arithmetic genus must be >= 0");
    c.h_dot = as_int(field(curves[i], w, "H_dot"), pointer(w, "H_dot"));
    m.curves.push_back(std::move(c));
  }
  return m;
}

DeclaredModel parse_model(const std::string& text) { return model_from_json(parse_json(text)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace k3lat
