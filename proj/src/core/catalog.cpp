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

#include "k3lat/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <set>

#include "k3lat/errors.hpp"
#include "k3lat/kodaira.hpp"
#include "k3lat/root_systems.hpp"

#ifndef K3LAT_DEFAULT_CATALOG_DIR
#define K3LAT_DEFAULT_CATALOG_DIR "data/catalog"
#endif

namespace k3lat {

std::string catalog_dir() {
  if (const char* env = std::getenv("K3LAT_CATALOG_DIR"); env && *env) return env;
  return K3LAT_DEFAULT_CATALOG_DIR;
}

std::vector<CatalogEntry> load_catalog(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw ParseError(dir, "catalog directory not found");
  std::vector<CatalogEntry> out;
  for (const auto& de : fs::directory_iterator(dir)) {
    if (de.path().extension() != ".json") continue;
    CatalogEntry e;
    e.path = de.path().string();
    try {
      e.data = parse_json(read_file(e.path));
    } catch (const ParseError& pe) {
      throw ParseError(e.path + ": " + pe.where(), "invalid JSON");
    }
    if (!e.data.is_object() || !e.data.contains("name") || !e.data["name"].is_string() ||
        !e.data.contains("kind") || !e.data["kind"].is_string())
      throw ParseError(e.path, "catalog entry needs string fields name and kind");
    e.name = e.data["name"].get<std::string>();
    e.kind = e.data["kind"].get<std::string>();
    if (e.data.contains("description") && e.data["description"].is_string())
      e.description = e.data["description"].get<std::string>();
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

SurfaceContext make_context(int characteristic, bool non_unirational, std::optional<int> sigma) {
  SurfaceContext ctx;
  ctx.characteristic = characteristic;
  ctx.rho_max = characteristic == 0 ? 20 : 22;
  if (non_unirational) ctx.unirational = false;
  ctx.artin_invariant = sigma;
  return ctx;
}

namespace {

class Checker {
 public:
  explicit Checker(EntryCheck& out) : out_(out) {}

  template <typename A, typename B>
  void equal(const std::string& what, const A& actual, const B& expected) {
    ++out_.checks;
    if (!(actual == expected)) {
      out_.pass = false;
      out_.mismatches.push_back(what + ": expected " + Json(expected).dump() + ", got " +
                                Json(actual).dump());
    }
  }

  void certificate(const BoundCertificate& c) {
    ++out_.certificates;
    const auto problem = verify_certificate(c);
    if (!problem.empty()) fail("certificate (" + std::string(to_string(c.kind)) + "): " + problem);
  }

  void fail(const std::string& msg) {
    out_.pass = false;
    out_.mismatches.push_back(msg);
  }

 private:
  EntryCheck& out_;
};

std::string str(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

SymMatrix lattice_gram(const CurveConfig& cfg) { return quotient_by_kernel(cfg).gram; }

void check_config(const CatalogEntry& e, const Json& exp, Checker& ck) {
  const ConfigFile f = config_from_json(e.data);
  const CurveConfig& cfg = f.config;
  for (auto it = exp.begin(); it != exp.end(); ++it) {
    const std::string& key = it.key();
    const Json& v = it.value();
    if (key == "vertices") {
      ck.equal(key, cfg.size(), v.get<std::size_t>());
    } else if (key == "classification") {
      ck.equal(key, std::string(to_string(classify(cfg).kind)), str(v));
    } else if (key == "decomposition") {
      std::vector<std::string> names;
      for (const auto& c : decompose(cfg).components) names.push_back(c.name());
      auto want = v.get<std::vector<std::string>>();
      std::sort(names.begin(), names.end());
      std::sort(want.begin(), want.end());
      ck.equal(key, names, want);
    } else if (key == "entry_sum") {
      ck.equal(key, to_string(inverse(lattice_gram(cfg)).entry_sum()), str(v));
    } else if (key == "positive_entry_sum") {
      ck.equal(key, to_string(inverse(lattice_gram(cfg)).positive_entry_sum()), str(v));
    } else if (key == "rough_bound" || key == "box_bound") {
      const int d = v.at("d").get<int>();
      std::optional<BoundCertificate> c;
      if (key == "rough_bound") c = rough_bound_for(lattice_gram(cfg), d);
      else c = box_certificate_for(lattice_gram(cfg), d);
      if (!c) {
        ck.fail(key + ": no certificate found");
        continue;
      }
      ck.certificate(*c);
      ck.equal(key + " d=" + std::to_string(d), to_string(c->bound_on_2h), str(v.at("value")));
    } else if (key == "exclude") {
      for (const auto& q : v) {
        const int d = q.at("d").get<int>(), h = q.at("h").get<int>();
        const auto verdict = exclude(cfg, d, h);
        for (const auto& c : verdict.certificates) ck.certificate(c);
        const std::string tag = "exclude d=" + std::to_string(d) + " h=" + std::to_string(h);
        ck.equal(tag, std::string(to_string(verdict.status)), str(q.at("status")));
        if (q.contains("bound")) {
          if (verdict.certificates.empty()) ck.fail(tag + ": no certificate");
          else ck.equal(tag + " bound", to_string(verdict.certificates.front().bound_on_2h), str(q["bound"]));
        }
      }
    } else if (key == "max_h") {
      const auto r = admissible_h_range(cfg, std::max(1, cfg.max_degree()));
      ck.equal(key, r.max_h ? to_string(*r.max_h) : std::string("none"), str(v));
    } else if (key == "intrinsic_square") {
      const auto ip = intrinsic_polarization(cfg);
      ck.equal(key, ip.exists ? to_string(ip.square) : std::string("none"), str(v));
    } else if (key == "kodaira_contains") {
      std::set<std::string> found;
      for (const auto& d : find_kodaira_divisors(cfg)) found.insert(d.type.name());
      for (const auto& t : v) {
        const auto name = t.get<std::string>();
        ck.equal("kodaira " + name, found.count(name) > 0, true);
      }
    } else {
      ck.fail("unknown expectation '" + key + "'");
    }
  }
}

void check_hits(const std::string& key, const std::vector<ExtremalEntry>& hits, const Json& want,
                bool exact, Checker& ck) {
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& h : hits) got.emplace(h.key, h.mordell_weil);
  std::set<std::pair<std::string, std::string>> expected;
  for (const auto& w : want) expected.emplace(str(w.at("key")), str(w.at("mordell_weil")));
  if (exact) {
    ck.equal(key, Json(got).dump(), Json(expected).dump());
    return;
  }
  for (const auto& w : expected)
    ck.equal(key + " " + w.first, got.count(w) > 0, true);
}

void check_profile(const CatalogEntry& e, const Json& exp, Checker& ck) {
  const FibrationProfile p = profile_from_json(e.data);
  const auto b = budget_check(p);
  for (auto it = exp.begin(); it != exp.end(); ++it) {
    const std::string& key = it.key();
    const Json& v = it.value();
    if (key == "budget_ok") ck.equal(key, b.ok, v.get<bool>());
    else if (key == "euler_total") ck.equal(key, b.euler_total, v.get<int>());
    else if (key == "components") ck.equal(key, b.components, v.get<int>());
    else if (key == "rational_component_bound") ck.equal(key, rational_component_bound(p, true), v.get<int>());
    else if (key == "mode_ceiling") ck.equal(key, rational_component_bound(p, false), v.get<int>());
    else if (key == "shioda_tate_rank") ck.equal(key, shioda_tate_rank(p), v.get<int>());
    else if (key == "extremal_hits") check_hits(key, extremal_lookup(p, p.characteristic), v, true, ck);
    else if (key == "extremal_hits_include")
      check_hits(key, extremal_lookup(p, p.characteristic), v, false, ck);
    else ck.fail("unknown expectation '" + key + "'");
  }
}

void check_uniform(const CatalogEntry& e, const Json& exp, Checker& ck) {
  const int rho = e.data.at("rho_max").get<int>();
  std::vector<std::string> names;
  for (const auto& p : enumerate_uniform(rho)) {
    if (!budget_check(p).ok) ck.fail("enumerated profile fails the budget");
    names.push_back(std::to_string(p.fibers.size()) + "x" + p.fibers.front().type.name());
  }
  for (auto it = exp.begin(); it != exp.end(); ++it) {
    if (it.key() == "profiles") ck.equal("profiles", names, it.value().get<std::vector<std::string>>());
    else ck.fail("unknown expectation '" + it.key() + "'");
  }
}

void check_sd(const CatalogEntry& e, const Json& exp, Checker& ck) {
  const auto& d = e.data;
  std::optional<int> sigma;
  if (d.contains("sigma")) sigma = d["sigma"].get<int>();
  const auto ctx = make_context(d.at("characteristic").get<int>(),
                                d.value("non_unirational", false), sigma);
  const auto b = sd_bound(ctx, d.value("restricted", false));
  for (auto it = exp.begin(); it != exp.end(); ++it) {
    const std::string& key = it.key();
    const Json& v = it.value();
    if (key == "bound") ck.equal(key, b.bound, v.get<int>());
    else if (key == "h_coefficient") ck.equal(key, to_string(b.h_threshold), str(v));
    else if (key == "counts") ck.equal(key, b.counts, str(v));
    else if (key == "conjectural_lines")
      ck.equal(key, b.conjectural_lines ? Json(*b.conjectural_lines) : Json(nullptr), v);
    else ck.fail("unknown expectation '" + key + "'");
  }
}

}  // namespace

EntryCheck verify_entry(const CatalogEntry& entry) {
  EntryCheck out;
  out.name = entry.name;
  Checker ck(out);
  if (!entry.data.contains("expected") || !entry.data["expected"].is_object()) {
    ck.fail("missing expected block");
    return out;
  }
  const Json& exp = entry.data["expected"];
  try {
    if (entry.kind == "config") check_config(entry, exp, ck);
    else if (entry.kind == "profile") check_profile(entry, exp, ck);
    else if (entry.kind == "uniform") check_uniform(entry, exp, ck);
    else if (entry.kind == "sd-bound") check_sd(entry, exp, ck);
    else ck.fail("unknown kind '" + entry.kind + "'");
  } catch (const std::exception& ex) {
    ck.fail(std::string("error: ") + ex.what());
  }
  if (out.checks == 0 && out.pass) ck.fail("expected block checks nothing");
  return out;
}

Report catalog_list_report(const std::string& dir) {
  Report r;
  const auto entries = load_catalog(dir);
  r.body = {{"summary", std::to_string(entries.size()) + " catalog entries"},
            {"command", "catalog list"},
            {"directory", dir}};
  OrderedJson a = OrderedJson::array();
  for (const auto& e : entries)
    a.push_back({{"name", e.name}, {"kind", e.kind}, {"description", e.description}});
  r.body["entries"] = std::move(a);
  return r;
}

Report catalog_show_report(const std::string& dir, const std::string& name) {
  for (const auto& e : load_catalog(dir)) {
    if (e.name != name) continue;
    Report r;
    r.body = {{"summary", e.name + " (" + e.kind + ")"}, {"command", "catalog show"}, {"path", e.path}};
    r.body["entry"] = OrderedJson::parse(e.data.dump());
    return r;
  }
  throw ValidationError("no catalog entry named '" + name + "'");
}

Report catalog_verify_report(const std::string& dir) {
  Report r;
  const auto entries = load_catalog(dir);
  OrderedJson a = OrderedJson::array();
  int passed = 0, certs = 0;
  for (const auto& e : entries) {
    const auto c = verify_entry(e);
    passed += c.pass ? 1 : 0;
    certs += c.certificates;
    a.push_back({{"name", c.name}, {"pass", c.pass}, {"checks", c.checks},
                 {"certificates", c.certificates}, {"mismatches", c.mismatches}});
  }
  r.flagged = passed != static_cast<int>(entries.size()) || entries.empty();
  r.body = {{"summary", std::to_string(passed) + "/" + std::to_string(entries.size()) +
                            " entries verified, " + std::to_string(certs) + " certificates re-checked"},
            {"command", "catalog verify"},
            {"directory", dir}};
  r.body["entries"] = std::move(a);
  return r;
}

}  // namespace k3lat
