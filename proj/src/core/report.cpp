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

#include "k3lat/report.hpp"

#include <sstream>

#include "k3lat/errors.hpp"
#include "k3lat/kodaira.hpp"
#include "k3lat/root_systems.hpp"

namespace k3lat {

std::string rational_text(const Rational& q) { return to_string(q); }

namespace {

OrderedJson vector_json(const RationalVector& v) {
  OrderedJson a = OrderedJson::array();
  for (const auto& x : v) a.push_back(rational_text(x));
  return a;
}

OrderedJson ids_json(const CurveConfig& cfg, const std::vector<std::size_t>& idx) {
  OrderedJson a = OrderedJson::array();
  for (auto i : idx) a.push_back(cfg.vertex(i).id);
  return a;
}

OrderedJson violation_json(const Violation& v) {
  return {{"rule", v.rule}, {"vertices", v.vertices}, {"slack", rational_text(v.slack)},
          {"message", v.message}};
}

OrderedJson header(const std::string& command, const ConfigFile& f) {
  return {{"summary", ""}, {"command", command}, {"name", f.name}, {"vertices", f.config.size()}};
}

}  // namespace

OrderedJson matrix_json(const SymMatrix& m) {
  OrderedJson rows = OrderedJson::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(rational_text(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

OrderedJson certificate_json(const BoundCertificate& c) {
  OrderedJson j;
  j["kind"] = to_string(c.kind);
  j["bound_on_2h"] = rational_text(c.bound_on_2h);
  j["d"] = c.d;
  j["basis"] = c.basis_ids;
  j["method"] = c.method;
  j["gram"] = matrix_json(c.gram);
  switch (c.kind) {
    case CertificateKind::IntrinsicSquare:
      j["coords"] = vector_json(c.coords);
      j["degrees"] = vector_json(c.degrees);
      break;
    case CertificateKind::RoughPositiveEntrySum:
      j["gram_inverse"] = matrix_json(c.gram_inverse);
      break;
    case CertificateKind::BoxOptimumDecomposition:
      j["gram_inverse"] = matrix_json(c.gram_inverse);
      j["g0"] = matrix_json(c.g0);
      j["g_plus"] = matrix_json(c.g_plus);
      j["x_max"] = vector_json(c.x_max);
      break;
  }
  const std::string problem = verify_certificate(c);
  j["verified"] = problem.empty();
  if (!problem.empty()) j["verification_error"] = problem;
  return j;
}

Report classify_report(const ConfigFile& f) {
  Report r;
  r.body = header("classify", f);
  const auto cls = classify(f.config);
  r.body["kind"] = to_string(cls.kind);
  r.body["signature"] = {{"n_plus", cls.signature.n_plus},
                         {"n_minus", cls.signature.n_minus},
                         {"n_zero", cls.signature.n_zero}};
  OrderedJson vs = OrderedJson::array();
  const auto violations = validate_pairings(f.config, cls);
  for (const auto& v : violations) vs.push_back(violation_json(v));
  r.body["violations"] = std::move(vs);
  if (cls.kind == LatticeKind::Hyperbolic || cls.kind == LatticeKind::Invalid) {
    if (auto w = positive_witness(f.config)) {
      OrderedJson a = OrderedJson::array();
      for (const auto& x : *w) a.push_back(to_string(x));
      r.body["positive_witness"] = std::move(a);
    }
  }
  r.flagged = !violations.empty() || cls.kind == LatticeKind::Invalid;
  r.body["summary"] = std::string(to_string(cls.kind)) + ", signature (" +
                      std::to_string(cls.signature.n_plus) + ", " +
                      std::to_string(cls.signature.n_minus) + ", " +
                      std::to_string(cls.signature.n_zero) + "), " +
                      std::to_string(violations.size()) + " violation(s)";
  return r;
}

Report decompose_report(const ConfigFile& f) {
  Report r;
  r.body = header("decompose", f);
  Decomposition dec;
  try {
    dec = decompose(f.config);
  } catch (const NotNegativeSemidefinite& e) {
    r.flagged = true;
    r.body["summary"] = std::string("not negative semi-definite: ") + e.what();
    return r;
  }
  OrderedJson comps = OrderedJson::array();
  std::string names;
  for (const auto& c : dec.components) {
    OrderedJson cj = {{"type", c.name()}, {"ids", c.ids}};
    if (c.kernel) {
      OrderedJson k = OrderedJson::array();
      for (const auto& x : *c.kernel) k.push_back(to_string(x));
      cj["kernel"] = std::move(k);
      cj["kodaira"] = kodaira_type_of(c.kind, c.rank).name();
    }
    comps.push_back(std::move(cj));
    names += (names.empty() ? "" : " + ") + c.name();
  }
  r.body["components"] = std::move(comps);
  OrderedJson un = OrderedJson::array();
  for (const auto& u : dec.unrecognized) un.push_back(ids_json(f.config, u));
  r.body["unrecognized"] = std::move(un);
  r.body["fits_rho_20"] = max_rank_check(dec, 20);
  r.body["fits_rho_22"] = max_rank_check(dec, 22);
  r.flagged = !dec.unrecognized.empty() || !max_rank_check(dec, 22);
  r.body["summary"] = names.empty() ? std::string("empty") : names;
  return r;
}

Report kodaira_report(const ConfigFile& f, std::optional<int> max_weight) {
  Report r;
  r.body = header("kodaira", f);
  const auto divs = find_kodaira_divisors(f.config, max_weight);
  OrderedJson a = OrderedJson::array();
  for (const auto& d : divs) {
    OrderedJson dj = {{"type", d.type.name()}, {"weight", d.weight()}, {"ids", d.ids},
                      {"multiplicities", d.multiplicities}};
    if (d.nodal_or_cuspidal) dj["nodal_or_cuspidal"] = true;
    a.push_back(std::move(dj));
  }
  r.body["divisors"] = std::move(a);
  if (max_weight) r.body["max_weight"] = *max_weight;
  r.body["summary"] = std::to_string(divs.size()) + " Kodaira-type divisor(s)";
  return r;
}

Report polarize_report(const ConfigFile& f) {
  Report r;
  r.body = header("polarize", f);
  const auto ip = intrinsic_polarization(f.config);
  r.body["exists"] = ip.exists;
  r.body["basis"] = ids_json(f.config, ip.basis);
  if (ip.exists) {
    r.body["coords"] = vector_json(ip.coords);
    r.body["square"] = rational_text(ip.square);
  }
  const int d = std::max(1, f.config.max_degree());
  const auto range = admissible_h_range(f.config, d);
  r.body["d"] = d;
  r.body["max_h"] = range.max_h ? OrderedJson(to_string(*range.max_h)) : OrderedJson(nullptr);
  r.body["note"] = range.note;
  r.flagged = !ip.exists;
  r.body["summary"] = ip.exists ? "H^2 = " + rational_text(ip.square)
                                : std::string("intrinsic polarization does not exist");
  return r;
}

Report bound_report(const ConfigFile& f, int d, BoundMethod method) {
  Report r;
  r.body = header("bound", f);
  if (f.config.max_degree() > d) throw ValidationError("a vertex degree exceeds d");
  if (classify(f.config).kind != LatticeKind::Hyperbolic)
    throw ValidationError("bounds need a hyperbolic configuration");
  const Quotient q = quotient_by_kernel(f.config);
  std::vector<std::size_t> basis = q.basis;
  std::optional<BoundCertificate> cert;
  if (method != BoundMethod::Box) cert = rough_bound_for(q.gram, d);
  if (method != BoundMethod::Rough) {
    auto box = box_certificate_for(q.gram, d);
    if (!box && method == BoundMethod::Box)
      throw NoDecompositionFound("no G0 + G+ split of the inverse Gram matrix was found");
    if (box && (!cert || box->bound_on_2h <= cert->bound_on_2h)) cert = std::move(box);
  }
  for (auto b : basis) cert->basis_ids.push_back(f.config.vertex(b).id);
  cert->basis = basis;
  if (basis.size() != f.config.size()) r.body["note"] = "computed on L = M / ker(M)";
  r.body["bound_on_2h"] = rational_text(cert->bound_on_2h);
  r.body["max_h"] = to_string(floor_of(cert->bound_on_2h / 2));
  r.body["certificate"] = certificate_json(*cert);
  r.flagged = !r.body["certificate"]["verified"].get<bool>();
  r.body["summary"] = std::string(to_string(cert->kind)) + ", 2h <= " + rational_text(cert->bound_on_2h);
  return r;
}

Report exclude_report(const ConfigFile& f, int d, int h, int cap, DegreeMode mode) {
  Report r;
  r.body = header("exclude", f);
  const auto v = exclude(f.config, d, h, cap, mode);
  r.body["d"] = d;
  r.body["h"] = h;
  r.body["status"] = to_string(v.status);
  r.body["subgraphs_examined"] = v.subgraphs_examined;
  r.body["notes"] = v.notes;
  OrderedJson certs = OrderedJson::array();
  for (const auto& c : v.certificates) certs.push_back(certificate_json(c));
  r.body["certificates"] = std::move(certs);
  r.flagged = v.status == Verdict::HyperbolicExcluded || v.status == Verdict::EllipticExcluded ||
              v.status == Verdict::InvalidSignature;
  std::string summary = to_string(v.status);
  if (!v.certificates.empty()) {
    const auto& b = v.certificates.front().bound_on_2h;
    summary += ", bound " + rational_text(b) + (b < 2 * h ? " < " : " >= ") + std::to_string(2 * h);
  }
  r.body["summary"] = summary;
  return r;
}

Report budget_report(const FibrationProfile& p) {
  Report r;
  r.body = {{"summary", ""}, {"command", "budget"}};
  r.body["profile"] = profile_to_json(p);
  const auto b = budget_check(p);
  r.body["ok"] = b.ok;
  r.body["euler_total"] = b.euler_total;
  r.body["target"] = b.target;
  r.body["components"] = b.components;
  r.body["reducible"] = b.reducible;
  r.body["notes"] = b.notes;
  if (b.ok) {
    r.body["rational_component_bound"] = rational_component_bound(p, true);
    r.body["mode_ceiling"] = rational_component_bound(p, false);
    r.body["shioda_tate_rank"] = shioda_tate_rank(p);
    OrderedJson hits = OrderedJson::array();
    for (const auto& e : extremal_lookup(p, p.characteristic))
      hits.push_back({{"key", e.key}, {"lattice", e.lattice}, {"mordell_weil", e.mordell_weil},
                      {"realized", e.realized}, {"note", e.note}});
    r.body["extremal_hits"] = std::move(hits);
  }
  r.flagged = !b.ok;
  r.body["summary"] = b.ok ? "budget holds, components " + std::to_string(b.components)
                           : "budget fails, Euler sum " + std::to_string(b.euler_total) + " != 24";
  return r;
}

Report uniform_report(int rho_max) {
  Report r;
  r.body = {{"summary", ""}, {"command", "enum-uniform"}, {"rho_max", rho_max}};
  OrderedJson a = OrderedJson::array();
  std::string names;
  const auto profiles = enumerate_uniform(rho_max);
  for (const auto& p : profiles) {
    const std::string name = std::to_string(p.fibers.size()) + "x" + p.fibers.front().type.name();
    a.push_back({{"profile", name}, {"shioda_tate_rank", shioda_tate_rank(p)},
                 {"components", budget_check(p).components}});
    names += (names.empty() ? "" : ", ") + name;
  }
  r.body["profiles"] = std::move(a);
  r.body["summary"] = std::to_string(profiles.size()) + " profile(s): " + names;
  return r;
}

Report sd_bound_report(const SurfaceContext& ctx, bool restricted) {
  Report r;
  r.body = {{"summary", ""}, {"command", "sd-bound"}, {"characteristic", ctx.characteristic}};
  const auto b = sd_bound(ctx, restricted);
  r.body["bound"] = b.bound;
  r.body["counts"] = b.counts;
  r.body["h_threshold"] = "h > " + rational_text(b.h_threshold) + " d^2";
  r.body["h_coefficient"] = rational_text(b.h_threshold);
  r.body["hypotheses"] = b.hypotheses;
  r.body["notes"] = b.notes;
  if (b.conjectural_lines) {
    r.body["conjectural_lines"] = *b.conjectural_lines;
    r.body["conjectural_note"] = b.conjectural_note;
  }
  r.body["summary"] = b.counts + " <= " + std::to_string(b.bound) + " for h > " +
                      rational_text(b.h_threshold) + " d^2";
  return r;
}

Report very_ample_report(const DeclaredModel& m) {
  Report r;
  r.body = {{"summary", ""}, {"command", "very-ample"}};
  const auto v = very_ample_check(m);
  r.body["pass"] = v.pass;
  OrderedJson failed = OrderedJson::array();
  for (const auto& c : v.failed)
    failed.push_back({{"condition", c.condition}, {"label", c.label}, {"message", c.message}});
  r.body["failed"] = std::move(failed);
  r.body["notes"] = v.notes;
  r.flagged = !v.pass;
  r.body["summary"] = v.pass ? std::string("conditions hold on declared classes")
                             : std::to_string(v.failed.size()) + " condition failure(s)";
  return r;
}

namespace {

std::string scalar_text(const OrderedJson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

bool all_scalars(const OrderedJson& a) {
  for (const auto& x : a)
    if (x.is_structured()) return false;
  return true;
}

void render(std::ostringstream& os, const OrderedJson& v, int indent);

void render_field(std::ostringstream& os, const std::string& key, const OrderedJson& v, int indent) {
  const std::string pad(indent, ' ');
  if (!v.is_structured()) {
    os << pad << key << ": " << scalar_text(v) << "\n";
  } else if (v.is_array() && all_scalars(v)) {
    os << pad << key << ": [";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
    os << "]\n";
  } else if (v.empty()) {
    os << pad << key << ": " << (v.is_array() ? "[]" : "{}") << "\n";
  } else {
    os << pad << key << ":\n";
    render(os, v, indent + 2);
  }
}

void render(std::ostringstream& os, const OrderedJson& v, int indent) {
  const std::string pad(indent, ' ');
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) render_field(os, it.key(), it.value(), indent);
    return;
  }
  for (const auto& x : v) {
    if (x.is_array() && all_scalars(x)) {
      os << pad << "[";
      for (std::size_t i = 0; i < x.size(); ++i) os << (i ? " " : "") << scalar_text(x[i]);
      os << "]\n";
    } else if (x.is_structured()) {
      os << pad << "-\n";
      render(os, x, indent + 2);
    } else {
      os << pad << "- " << scalar_text(x) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const OrderedJson& body) {
  std::ostringstream os;
  if (body.contains("summary")) os << scalar_text(body["summary"]) << "\n";
  for (auto it = body.begin(); it != body.end(); ++it)
    if (it.key() != "summary") render_field(os, it.key(), it.value(), 0);
  return os.str();
}

std::string render_json(const OrderedJson& body) { return body.dump(2) + "\n"; }

}  // namespace k3lat
