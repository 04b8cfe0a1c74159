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

#ifndef K3LAT_K3LAT_H_
#define K3LAT_K3LAT_H_

#include <stddef.h>

#if defined(_WIN32)
#define K3LAT_API __declspec(dllexport)
#else
#define K3LAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  K3LAT_OK = 0,
  K3LAT_FLAGGED = 1,      /* violation, exclusion or failed check reported */
  K3LAT_INPUT_ERROR = 2,  /* malformed or unsuitable input */
  K3LAT_INTERNAL_ERROR = 3
} k3lat_status;

typedef enum { K3LAT_FORMAT_TEXT = 0, K3LAT_FORMAT_JSON = 1 } k3lat_format;

typedef enum { K3LAT_BOUND_ROUGH = 0, K3LAT_BOUND_BOX = 1, K3LAT_BOUND_AUTO = 2 } k3lat_bound_method;

typedef struct k3lat_config k3lat_config;

K3LAT_API const char* k3lat_version(void);

/* Message of the last failing call on this thread; never NULL. */
K3LAT_API const char* k3lat_last_error(void);

/* Frees a report string returned by this library. NULL is accepted. */
K3LAT_API void k3lat_string_free(char* s);

K3LAT_API k3lat_status k3lat_config_parse(const char* json_text, k3lat_config** out);
K3LAT_API k3lat_status k3lat_config_load(const char* path, k3lat_config** out);
K3LAT_API void k3lat_config_free(k3lat_config* cfg);
K3LAT_API size_t k3lat_config_size(const k3lat_config* cfg);
/* Canonical JSON serialization. */
K3LAT_API k3lat_status k3lat_config_serialize(const k3lat_config* cfg, char** out);

/* Every report call stores a newly allocated string in *report (also on
   K3LAT_FLAGGED); on error *report is NULL and k3lat_last_error() is set. */
K3LAT_API k3lat_status k3lat_classify(const k3lat_config* cfg, k3lat_format fmt, char** report);
K3LAT_API k3lat_status k3lat_decompose(const k3lat_config* cfg, k3lat_format fmt, char** report);
/* max_weight <= 0 means no limit. */
K3LAT_API k3lat_status k3lat_kodaira(const k3lat_config* cfg, int max_weight, k3lat_format fmt,
                                     char** report);
K3LAT_API k3lat_status k3lat_polarize(const k3lat_config* cfg, k3lat_format fmt, char** report);
K3LAT_API k3lat_status k3lat_bound(const k3lat_config* cfg, int d, k3lat_bound_method method,
                                   k3lat_format fmt, char** report);
/* cap <= 0 selects the default subgraph cap. pinned != 0 treats the degrees as exact. */
K3LAT_API k3lat_status k3lat_exclude(const k3lat_config* cfg, int d, int h, int cap, int pinned,
                                     k3lat_format fmt, char** report);

K3LAT_API k3lat_status k3lat_budget(const char* profile_json, k3lat_format fmt, char** report);
K3LAT_API k3lat_status k3lat_enum_uniform(int rho_max, k3lat_format fmt, char** report);
/* sigma <= 0 means unknown. */
K3LAT_API k3lat_status k3lat_sd_bound(int characteristic, int non_unirational, int sigma,
                                      int restricted, k3lat_format fmt, char** report);
K3LAT_API k3lat_status k3lat_very_ample(const char* model_json, k3lat_format fmt, char** report);

/* Catalog calls read K3LAT_CATALOG_DIR, else the installed data directory. */
K3LAT_API k3lat_status k3lat_catalog_list(k3lat_format fmt, char** report);
K3LAT_API k3lat_status k3lat_catalog_show(const char* name, k3lat_format fmt, char** report);
K3LAT_API k3lat_status k3lat_catalog_verify(k3lat_format fmt, char** report);

/* Reads a whole file into a library-owned string (free with k3lat_string_free). */
K3LAT_API k3lat_status k3lat_read_file(const char* path, char** out);

#ifdef __cplusplus
}
#endif

#endif  // K3LAT_K3LAT_H_
