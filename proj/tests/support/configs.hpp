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
#include <utility>
#include <vector>

#include "k3lat/curve_graph.hpp"

namespace fixtures {

using k3lat::CurveConfig;
using k3lat::CurveVertex;

inline CurveConfig graph(const std::vector<std::string>& ids,
                         const std::vector<std::pair<std::string, std::string>>& edges, int mult = 1) {
  std::vector<CurveVertex> vs;
  for (const auto& id : ids) vs.push_back({id, -2, 1});
  CurveConfig cfg(vs);
  for (const auto& [a, b] : edges) cfg.set_edge(a, b, mult);
  return cfg;
}

inline CurveConfig path(int n) {
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) {
    ids.push_back("v" + std::to_string(i));
    if (i) edges.emplace_back(ids[i - 1], ids[i]);
  }
  return graph(ids, edges);
}

inline CurveConfig cycle(int n) {
  auto cfg = path(n);
  cfg.set_edge("v0", "v" + std::to_string(n - 1), 1);
  return cfg;
}

inline CurveConfig star4() {
  return graph({"c", "a", "b", "d", "e"}, {{"c", "a"}, {"c", "b"}, {"c", "d"}, {"c", "e"}});
}

inline CurveConfig pair(int mult) { return graph({"x", "y"}, {{"x", "y"}}, mult); }

// I2* with three curves each meeting a distinct simple component.
inline CurveConfig d6tilde_example() {
  return graph({"c1", "c2", "c3", "e1", "e2", "e3", "e4", "f1", "f2", "f3"},
               {{"c1", "c2"}, {"c2", "c3"}, {"c1", "e1"}, {"c1", "e2"}, {"c3", "e3"},
                {"c3", "e4"}, {"e1", "f1"}, {"e2", "f2"}, {"e3", "f3"}});
}

// I3* with four disjoint sections, one per simple component.
inline CurveConfig char3_example() {
  return graph({"c0", "c1", "c2", "c3", "l0", "l1", "l2", "l3", "s0", "s1", "s2", "s3"},
               {{"c0", "c1"}, {"c1", "c2"}, {"c2", "c3"}, {"c0", "l0"}, {"c0", "l1"},
                {"c3", "l2"}, {"c3", "l3"}, {"l0", "s0"}, {"l1", "s1"}, {"l2", "s2"},
                {"l3", "s3"}});
}

// IV* with an A2 chain continuing each arm.
inline CurveConfig char2_example() {
  std::vector<std::string> ids{"z"};
  std::vector<std::pair<std::string, std::string>> edges;
  for (char arm : std::string("abc")) {
    std::string prev = "z";
    for (int i = 1; i <= 4; ++i) {
      const std::string id = std::string(1, arm) + std::to_string(i);
      ids.push_back(id);
      edges.emplace_back(prev, id);
      prev = id;
    }
  }
  return graph(ids, edges);
}

// Isotropic vertex of degree 6 meeting a -2 vertex of degree 1: G = [[0,1],[1,-2]].
inline CurveConfig isotropic_with_root() {
  CurveConfig cfg({{"D", 0, 6}, {"C", -2, 1}});
  cfg.set_edge("D", "C", 1);
  return cfg;
}

}  // namespace fixtures
