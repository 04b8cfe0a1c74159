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

#include <optional>
#include <string>

#include "k3lat/bounds.hpp"
#include "k3lat/config_io.hpp"
#include "k3lat/fibration.hpp"

namespace k3lat {

using OrderedJson = nlohmann::ordered_json;

/// A rendered command result. `flagged` drives exit code 1.
struct Report {
  OrderedJson body;
  bool flagged = false;
};

std::string rational_text(const Rational& q);
OrderedJson matrix_json(const SymMatrix& m);
OrderedJson certificate_json(const BoundCertificate& c);

Report classify_report(const ConfigFile& f);
Report decompose_report(const ConfigFile& f);
Report kodaira_report(const ConfigFile& f, std::optional<int> max_weight);
Report polarize_report(const ConfigFile& f);

enum class BoundMethod { Rough, Box, Auto };
Report bound_report(const ConfigFile& f, int d, BoundMethod method);
Report exclude_report(const ConfigFile& f, int d, int h, int cap, DegreeMode mode);

Report budget_report(const FibrationProfile& p);
Report uniform_report(int rho_max);
Report sd_bound_report(const SurfaceContext& ctx, bool restricted);
Report very_ample_report(const DeclaredModel& m);

/// Deterministic "key: value" text; the "summary" field comes first.
std::string render_text(const OrderedJson& body);
std::string render_json(const OrderedJson& body);

}  // namespace k3lat
