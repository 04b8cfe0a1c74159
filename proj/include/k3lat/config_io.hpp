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

#pragma once

#include <string>

#include "k3lat/curve_graph.hpp"
#include "k3lat/fibration.hpp"
#include "json.hpp"

namespace k3lat {

using Json = nlohmann::json;

struct ConfigFile {
  std::string name;
  CurveConfig config;
  Json metadata = Json::object();

  friend bool operator==(const ConfigFile&, const ConfigFile&) = default;
};

/// Parses JSON text. Syntax errors raise ParseError with "line L, column C";
/// schema errors raise ParseError located by JSON pointer; invariant breaches
/// raise ValidationError.
Json parse_json(const std::string& text);

ConfigFile parse_config(const std::string& text);
ConfigFile config_from_json(const Json& j);
Json config_to_json(const ConfigFile& file);
/// Canonical form: keys name, vertices, edges, metadata; edges sorted by vertex order.
std::string serialize_config(const ConfigFile& file);

FibrationProfile parse_profile(const std::string& text);
FibrationProfile profile_from_json(const Json& j);
Json profile_to_json(const FibrationProfile& profile);

DeclaredModel parse_model(const std::string& text);
DeclaredModel model_from_json(const Json& j);

std::string read_file(const std::string& path);

}  // namespace k3lat
