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

#include "k3lat/k3lat.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "k3lat/catalog.hpp"
#include "k3lat/config_io.hpp"
#include "k3lat/errors.hpp"
#include "k3lat/report.hpp"

struct k3lat_config {
  k3lat::ConfigFile file;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

k3lat_status fail(k3lat_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

template <typename F>
k3lat_status guarded(char** out, F&& body) {
  if (out) *out = nullptr;
  try {
    g_last_error.clear();
    return body();
  } catch (const k3lat::ParseError& e) {
    return fail(K3LAT_INPUT_ERROR, std::string("parse error: ") + e.what());
  } catch (const k3lat::ValidationError& e) {
    return fail(K3LAT_INPUT_ERROR, std::string("validation error: ") + e.what());
  } catch (const k3lat::Error& e) {
    return fail(K3LAT_INPUT_ERROR, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(K3LAT_INPUT_ERROR, e.what());
  } catch (const std::domain_error& e) {
    return fail(K3LAT_INPUT_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(K3LAT_INTERNAL_ERROR, std::string("internal error: ") + e.what());
  } catch (...) {
    return fail(K3LAT_INTERNAL_ERROR, "internal error");
  }
}

k3lat_status emit(const k3lat::Report& r, k3lat_format fmt, char** report) {
  if (!report) return fail(K3LAT_INPUT_ERROR, "report pointer is NULL");
  *report = dup_string(fmt == K3LAT_FORMAT_JSON ? k3lat::render_json(r.body) : k3lat::render_text(r.body));
  return r.flagged ? K3LAT_FLAGGED : K3LAT_OK;
}

bool bad_config(const k3lat_config* cfg) {
  if (cfg) return false;
  g_last_error = "configuration handle is NULL";
  return true;
}

}  // namespace

extern "C" {

const char* k3lat_version(void) { return "0.1.0"; }

const char* k3lat_last_error(void) { return g_last_error.c_str(); }

void k3lat_string_free(char* s) { std::free(s); }

k3lat_status k3lat_config_parse(const char* json_text, k3lat_config** out) {
  if (!out) return fail(K3LAT_INPUT_ERROR, "output pointer is NULL");
  *out = nullptr;
  if (!json_text) return fail(K3LAT_INPUT_ERROR, "text is NULL");
  return guarded(nullptr, [&] {
    auto* c = new k3lat_config{k3lat::parse_config(json_text)};
    *out = c;
    return K3LAT_OK;
  });
}

k3lat_status k3lat_config_load(const char* path, k3lat_config** out) {
  if (!out) return fail(K3LAT_INPUT_ERROR, "output pointer is NULL");
  *out = nullptr;
  if (!path) return fail(K3LAT_INPUT_ERROR, "path is NULL");
  return guarded(nullptr, [&] {
    const std::string text = k3lat::read_file(path);
    try {
      *out = new k3lat_config{k3lat::parse_config(text)};
    } catch (const k3lat::ParseError& e) {
      throw k3lat::ParseError(std::string(path) + ": " + e.where(),
                              std::string(e.what()).substr(e.where().empty() ? 0 : e.where().size() + 2));
    }
    return K3LAT_OK;
  });
}

void k3lat_config_free(k3lat_config* cfg) { delete cfg; }

size_t k3lat_config_size(const k3lat_config* cfg) { return cfg ? cfg->file.config.size() : 0; }

k3lat_status k3lat_config_serialize(const k3lat_config* cfg, char** out) {
  if (bad_config(cfg)) return K3LAT_INPUT_ERROR;
  return guarded(out, [&] {
    *out = dup_string(k3lat::serialize_config(cfg->file));
    return K3LAT_OK;
  });
}

k3lat_status k3lat_classify(const k3lat_config* cfg, k3lat_format fmt, char** report) {
  if (bad_config(cfg)) return K3LAT_INPUT_ERROR;
  return guarded(report, [&] { return emit(k3lat::classify_report(cfg->file), fmt, report); });
}

k3lat_status k3lat_decompose(const k3lat_config* cfg, k3lat_format fmt, char** report) {
  if (bad_config(cfg)) return K3LAT_INPUT_ERROR;
  return guarded(report, [&] { return emit(k3lat::decompose_report(cfg->file), fmt, report); });
}

k3lat_status k3lat_kodaira(const k3lat_config* cfg, int max_weight, k3lat_format fmt, char** report) {
  if (bad_config(cfg)) return K3LAT_INPUT_ERROR;
  return guarded(report, [&] {
    std::optional<int> w;
    if (max_weight > 0) w = max_weight;
    return emit(k3lat::kodaira_report(cfg->file, w), fmt, report);
  });
}

k3lat_status k3lat_polarize(const k3lat_config* cfg, k3lat_format fmt, char** report) {
  if (bad_config(cfg)) return K3LAT_INPUT_ERROR;
  return guarded(report, [&] { return emit(k3lat::polarize_report(cfg->file), fmt, report); });
}

k3lat_status k3lat_bound(const k3lat_config* cfg, int d, k3lat_bound_method method, k3lat_format fmt,
                         char** report) {
  if (bad_config(cfg)) return K3LAT_INPUT_ERROR;
  return guarded(report, [&] {
    k3lat::BoundMethod m = k3lat::BoundMethod::Auto;
    if (method == K3LAT_BOUND_ROUGH) m = k3lat::BoundMethod::Rough;
    if (method == K3LAT_BOUND_BOX) m = k3lat::BoundMethod::Box;
    return emit(k3lat::bound_report(cfg->file, d, m), fmt, report);
  });
}

k3lat_status k3lat_exclude(const k3lat_config* cfg, int d, int h, int cap, int pinned, k3lat_format fmt,
                           char** report) {
  if (bad_config(cfg)) return K3LAT_INPUT_ERROR;
  return guarded(report, [&] {
    const auto mode = pinned ? k3lat::DegreeMode::Pinned : k3lat::DegreeMode::CapOnly;
    return emit(k3lat::exclude_report(cfg->file, d, h, cap > 0 ? cap : k3lat::kDefaultSubgraphCap, mode),
                fmt, report);
  });
}

k3lat_status k3lat_budget(const char* profile_json, k3lat_format fmt, char** report) {
  if (!profile_json) return fail(K3LAT_INPUT_ERROR, "text is NULL");
  return guarded(report, [&] {
    return emit(k3lat::budget_report(k3lat::parse_profile(profile_json)), fmt, report);
  });
}

k3lat_status k3lat_enum_uniform(int rho_max, k3lat_format fmt, char** report) {
  return guarded(report, [&] {
    if (rho_max < 2) throw std::invalid_argument("rho_max must be at least 2");
    return emit(k3lat::uniform_report(rho_max), fmt, report);
  });
}

k3lat_status k3lat_sd_bound(int characteristic, int non_unirational, int sigma, int restricted,
                            k3lat_format fmt, char** report) {
  return guarded(report, [&] {
    std::optional<int> s;
    if (sigma > 0) s = sigma;
    const auto ctx = k3lat::make_context(characteristic, non_unirational != 0, s);
    return emit(k3lat::sd_bound_report(ctx, restricted != 0), fmt, report);
  });
}

k3lat_status k3lat_very_ample(const char* model_json, k3lat_format fmt, char** report) {
  if (!model_json) return fail(K3LAT_INPUT_ERROR, "text is NULL");
  return guarded(report, [&] {
    return emit(k3lat::very_ample_report(k3lat::parse_model(model_json)), fmt, report);
  });
}

k3lat_status k3lat_catalog_list(k3lat_format fmt, char** report) {
  return guarded(report, [&] { return emit(k3lat::catalog_list_report(k3lat::catalog_dir()), fmt, report); });
}

k3lat_status k3lat_catalog_show(const char* name, k3lat_format fmt, char** report) {
  if (!name) return fail(K3LAT_INPUT_ERROR, "name is NULL");
  return guarded(report, [&] {
    return emit(k3lat::catalog_show_report(k3lat::catalog_dir(), name), fmt, report);
  });
}

k3lat_status k3lat_catalog_verify(k3lat_format fmt, char** report) {
  return guarded(report, [&] {
    return emit(k3lat::catalog_verify_report(k3lat::catalog_dir()), fmt, report);
  });
}

k3lat_status k3lat_read_file(const char* path, char** out) {
  if (!path) return fail(K3LAT_INPUT_ERROR, "path is NULL");
  return guarded(out, [&] {
    *out = dup_string(k3lat::read_file(path));
    return K3LAT_OK;
  });
}

}  // extern "C"
