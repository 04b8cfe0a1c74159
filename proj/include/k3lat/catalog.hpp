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
#include <vector>

#include "k3lat/config_io.hpp"
#include "k3lat/report.hpp"

namespace k3lat {

struct CatalogEntry {
  std::string path;
  std::string name;
  std::string kind;  // config | profile | uniform | sd-bound
  std::string description;
  Json data;
};

/// $K3LAT_CATALOG_DIR if set, else the compiled-in data directory.
std::string catalog_dir();

/// All *.json entries of `dir`, sorted by name. Throws ParseError.
std::vector<CatalogEntry> load_catalog(const std::string& dir);

struct EntryCheck {
  std::string name;
  bool pass = true;
  int checks = 0;
  int certificates = 0;  // emitted and re-verified
  std::vector<std::string> mismatches;
};

EntryCheck verify_entry(const CatalogEntry& entry);

/// Surface context for an sd-bound entry or CLI flags.
SurfaceContext make_context(int characteristic, bool non_unirational, std::optional<int> sigma);

Report catalog_list_report(const std::string& dir);
Report catalog_show_report(const std::string& dir, const std::string& name);
Report catalog_verify_report(const std::string& dir);

}  // namespace k3lat
