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

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "k3lat/k3lat.h"

namespace {

int finish(k3lat_status st, char* report) {
  if (report) {
    std::fputs(report, stdout);
    k3lat_string_free(report);
  }
  if (st == K3LAT_INPUT_ERROR || st == K3LAT_INTERNAL_ERROR)
    std::fprintf(stderr, "error: %s\n", k3lat_last_error());
  return static_cast<int>(st);
}

template <typename F>
int with_config(const std::string& path, F&& call) {
  k3lat_config* cfg = nullptr;
  if (k3lat_config_load(path.c_str(), &cfg) != K3LAT_OK) return finish(K3LAT_INPUT_ERROR, nullptr);
  char* report = nullptr;
  const k3lat_status st = call(cfg, &report);
  k3lat_config_free(cfg);
  return finish(st, report);
}

template <typename F>
int with_text(const std::string& path, F&& call) {
  char* text = nullptr;
  if (k3lat_read_file(path.c_str(), &text) != K3LAT_OK) return finish(K3LAT_INPUT_ERROR, nullptr);
  char* report = nullptr;
  const k3lat_status st = call(text, &report);
  k3lat_string_free(text);
  return finish(st, report);
}

template <typename F>
int run(F&& call) {
  char* report = nullptr;
  const k3lat_status st = call(&report);
  return finish(st, report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice checks for configurations of rational curves on polarized K3 surfaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(k3lat_version()));
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string file;
  int d = 1, h = 1, cap = 0, max_weight = 0, rho_max = 22, characteristic = 0, sigma = 0;
  std::string method = "auto", name, action;
  bool pinned = false, non_unirational = false, restricted = false;
  int code = 0;

  auto* classify = app.add_subcommand("classify", "Signature class and pairing violations");
  classify->add_option("file", file, "Configuration file")->required();
  auto* decompose = app.add_subcommand("decompose", "ADE / affine decomposition");
  decompose->add_option("file", file, "Configuration file")->required();
  auto* kodaira = app.add_subcommand("kodaira", "Kodaira-type divisors supported on the curves");
  kodaira->add_option("file", file, "Configuration file")->required();
  kodaira->add_option("--max-weight", max_weight, "Largest weight to report");
  auto* polarize = app.add_subcommand("polarize", "Intrinsic polarization H_Gamma");
  polarize->add_option("file", file, "Configuration file")->required();
  auto* bound = app.add_subcommand("bound", "Certified upper bound on 2h");
  bound->add_option("file", file, "Configuration file")->required();
  bound->add_option("--d", d, "Degree cap")->required()->check(CLI::PositiveNumber);
  bound->add_option("--method", method, "Bound method")
      ->check(CLI::IsMember({"rough", "box", "auto"}))
      ->capture_default_str();
  auto* exclude = app.add_subcommand("exclude", "Decide whether the curves fit a degree 2h polarization");
  exclude->set_help_flag("--help", "Print this help message and exit");
  exclude->add_option("file", file, "Configuration file")->required();
  exclude->add_option("--d", d, "Degree cap")->required()->check(CLI::PositiveNumber);
  exclude->add_option("--h", h, "Half of H^2")->required()->check(CLI::PositiveNumber);
  exclude->add_option("--cap", cap, "Largest subgraph size")->check(CLI::PositiveNumber);
  exclude->add_flag("--pinned", pinned, "Treat the declared degrees as exact");
  auto* budget = app.add_subcommand("budget", "Euler budget of a fibre profile");
  budget->add_option("file", file, "Profile file")->required();
  auto* uniform = app.add_subcommand("enum-uniform", "Uniform I(n) fibre profiles");
  uniform->add_option("--rho-max", rho_max, "Maximal Picard rank")->required();
  auto* sd = app.add_subcommand("sd-bound", "Bound on the number of rational curves of degree <= d");
  sd->add_option("--char", characteristic, "Characteristic (0 or prime)")->required();
  sd->add_flag("--non-unirational", non_unirational, "X is not unirational");
  sd->add_option("--sigma", sigma, "Artin invariant")->check(CLI::Range(1, 10));
  sd->add_flag("--restricted", restricted, "Count S_d' rather than S_d");
  auto* ample = app.add_subcommand("very-ample", "Very-ampleness conditions on declared curves");
  ample->add_option("file", file, "Model file")->required();
  auto* catalog = app.add_subcommand("catalog", "Shipped catalog");
  catalog->add_option("action", action, "list, show or verify")
      ->required()
      ->check(CLI::IsMember({"list", "show", "verify"}));
  catalog->add_option("name", name, "Entry name for show");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const k3lat_format fmt = format == "json" ? K3LAT_FORMAT_JSON : K3LAT_FORMAT_TEXT;

  if (*classify) {
    code = with_config(file, [&](k3lat_config* c, char** r) { return k3lat_classify(c, fmt, r); });
  } else if (*decompose) {
    code = with_config(file, [&](k3lat_config* c, char** r) { return k3lat_decompose(c, fmt, r); });
  } else if (*kodaira) {
    code = with_config(file, [&](k3lat_config* c, char** r) { return k3lat_kodaira(c, max_weight, fmt, r); });
  } else if (*polarize) {
    code = with_config(file, [&](k3lat_config* c, char** r) { return k3lat_polarize(c, fmt, r); });
  } else if (*bound) {
    const k3lat_bound_method m = method == "rough" ? K3LAT_BOUND_ROUGH
                                 : method == "box" ? K3LAT_BOUND_BOX
                                                   : K3LAT_BOUND_AUTO;
    code = with_config(file, [&](k3lat_config* c, char** r) { return k3lat_bound(c, d, m, fmt, r); });
  } else if (*exclude) {
    code = with_config(file, [&](k3lat_config* c, char** r) {
      return k3lat_exclude(c, d, h, cap, pinned ? 1 : 0, fmt, r);
    });
  } else if (*budget) {
    code = with_text(file, [&](const char* t, char** r) { return k3lat_budget(t, fmt, r); });
  } else if (*uniform) {
    code = run([&](char** r) { return k3lat_enum_uniform(rho_max, fmt, r); });
  } else if (*sd) {
    code = run([&](char** r) { return k3lat_sd_bound(characteristic, non_unirational, sigma, restricted, fmt, r); });
  } else if (*ample) {
    code = with_text(file, [&](const char* t, char** r) { return k3lat_very_ample(t, fmt, r); });
  } else if (*catalog) {
    if (action == "list") {
      code = run([&](char** r) { return k3lat_catalog_list(fmt, r); });
    } else if (action == "verify") {
      code = run([&](char** r) { return k3lat_catalog_verify(fmt, r); });
    } else if (name.empty()) {
      std::fprintf(stderr, "error: catalog show needs an entry name\n");
      code = 2;
    } else {
      code = run([&](char** r) { return k3lat_catalog_show(name.c_str(), fmt, r); });
    }
  }
  return code;
}
