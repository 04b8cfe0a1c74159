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

#include "k3lat/fibration.hpp"

#include <algorithm>
#include <stdexcept>

#include "k3lat/errors.hpp"

namespace k3lat {

void FibrationProfile::add(const KodairaType& type, int count, int delta) {
  for (int i = 0; i < count; ++i) fibers.push_back({type, delta});
}

std::vector<std::string> FibrationProfile::fiber_names() const {
  std::vector<std::string> names;
  for (const auto& f : fibers)
    if (f.type.reduction != Reduction::Smooth) names.push_back(f.type.name());
  std::sort(names.begin(), names.end());
  return names;
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

bool reducible(const KodairaType& t) { return t.components >= 2; }

}  // namespace

std::vector<std::string> validate_profile(const FibrationProfile& profile) {
  std::vector<std::string> warnings;
  const int p = profile.characteristic;
  if (p != 0 && !is_prime(p)) throw ValidationError("characteristic must be 0 or a prime");
  if (profile.quasi_elliptic && p != 2 && p != 3)
    throw ValidationError("quasi-elliptic fibrations exist only in characteristic 2 or 3");
  for (const auto& f : profile.fibers) {
    const auto& t = f.type;
    if (t.reduction == Reduction::Ambiguous)
      throw ValidationError("ambiguous fibre type " + t.name() + " in a profile");
    if (f.delta < 0) throw ValidationError("negative wild ramification");
    if (f.delta > 0) {
      if (!t.is_additive()) throw ValidationError("wild ramification on non-additive fibre " + t.name());
      if (p != 2 && p != 3) throw ValidationError("wild ramification outside characteristic 2, 3");
      if (profile.quasi_elliptic)
        throw ValidationError("wild ramification does not enter the quasi-elliptic budget");
    }
    if (profile.quasi_elliptic) {
      if (!t.is_additive())
        throw ValidationError("quasi-elliptic fibre " + t.name() + " is not additive");
      if (p == 3 && reducible(t) && t.tag != KodairaTag::IV && t.tag != KodairaTag::IVStar &&
          t.tag != KodairaTag::IIStar)
        throw ValidationError("reducible quasi-elliptic fibres in characteristic 3 are IV, IV*, II*");
      if (p == 2 && reducible(t) && t.tag != KodairaTag::III && t.tag != KodairaTag::IStar &&
          t.tag != KodairaTag::IIIStar && t.tag != KodairaTag::IIStar)
        warnings.push_back("fibre " + t.name() + " not checked for quasi-elliptic characteristic 2");
    }
  }
  if (std::any_of(profile.fibers.begin(), profile.fibers.end(), [](const FiberInstance& f) {
        return f.delta > 0;
      }))
    warnings.push_back("wild ramification accepted without type-specific admissibility tables");
  return warnings;
}

BudgetReport budget_check(const FibrationProfile& profile) {
  BudgetReport r;
  try {
    r.notes = validate_profile(profile);
  } catch (const ValidationError& e) {
    r.notes.push_back(e.what());
    return r;
  }
  int total = profile.quasi_elliptic ? 4 : 0;
  for (const auto& f : profile.fibers) {
    const int e = f.type.euler();
    if (profile.quasi_elliptic) {
      if (e > 2) total += e - 2;
    } else {
      total += e + f.delta;
    }
    if (f.type.reduction != Reduction::Smooth) r.components += f.type.components;
    if (reducible(f.type)) ++r.reducible;
  }
  r.euler_total = total;
  r.ok = total == r.target;
  if (!r.ok)
    r.notes.push_back("Euler sum " + std::to_string(total) + " != 24 (discrepancy " +
                      std::to_string(total - r.target) + ")");
  if (profile.quasi_elliptic)
    r.notes.push_back("quasi-elliptic count 20 + #reducible fibres; irreducible fibres add no curves");
  return r;
}

int rational_component_bound(const FibrationProfile& profile, bool d_all_leq_d) {
  const auto report = budget_check(profile);
  if (!report.ok) throw ValidationError("profile fails the Euler budget");
  if (!d_all_leq_d) {
    if (!profile.quasi_elliptic) return 24;
    return profile.characteristic == 2 ? 40 : 30;
  }
  if (!profile.quasi_elliptic) return report.components;
  return 20 + report.reducible;
}

int shioda_tate_rank(const FibrationProfile& profile, int mw_rank) {
  if (mw_rank < 0) throw std::invalid_argument("negative Mordell-Weil rank");
  int r = 2 + mw_rank;
  for (const auto& f : profile.fibers)
    if (f.type.reduction != Reduction::Smooth) r += f.type.components - 1;
  return r;
}

std::vector<FibrationProfile> enumerate_uniform(int rho_max) {
  std::vector<FibrationProfile> out;
  for (int n = 2; n <= 24; ++n) {
    if (24 % n != 0) continue;
    FibrationProfile p;
    p.add(type_table(KodairaTag::I, n), 24 / n);
    if (shioda_tate_rank(p) <= rho_max) out.push_back(std::move(p));
  }
  return out;
}

void validate_context(const SurfaceContext& ctx) {
  const int p = ctx.characteristic;
  if (p != 0 && !is_prime(p)) throw UnsupportedContext("characteristic must be 0 or a prime");
  if (ctx.rho_max != 20 && ctx.rho_max != 22) throw UnsupportedContext("rho_max must be 20 or 22");
  if (p == 0 && ctx.rho_max != 20) throw UnsupportedContext("rho_max is 20 in characteristic 0");
  if (ctx.artin_invariant) {
    if (p == 0) throw UnsupportedContext("Artin invariant needs positive characteristic");
    if (*ctx.artin_invariant < 1 || *ctx.artin_invariant > 10)
      throw UnsupportedContext("Artin invariant must lie in 1..10");
  }
  if (p == 0 && ctx.unirational.value_or(false))
    throw UnsupportedContext("K3 surfaces in characteristic 0 are not unirational");
}

SdBound sd_bound(const SurfaceContext& ctx, bool restricted) {
  validate_context(ctx);
  SdBound b;
  const int p = ctx.characteristic;
  auto general = [&](std::string hypothesis) {
    b.bound = 24;
    b.h_threshold = 42;
    b.counts = "S_d";
    b.hypotheses.push_back(std::move(hypothesis));
  };
  auto special = [&](int bound, Rational threshold, std::string hypothesis) {
    b.bound = bound;
    b.h_threshold = std::move(threshold);
    b.counts = "S_d'";
    b.hypotheses.push_back(std::move(hypothesis));
    if (!restricted)
      b.notes.push_back("no bound for S_d under these hypotheses; the bound applies to S_d'");
  };
  if (p != 2 && p != 3) {
    general(p == 0 ? "characteristic 0" : "characteristic p != 2, 3");
  } else if (p == 2) {
    if (ctx.unirational == false) {
      general("characteristic 2, X not unirational");
    } else {
      special(40, Rational(185, 4), "characteristic 2");
      b.conjectural_lines = 25;
      b.conjectural_note =
          "expected, not proven: at most 25 lines for d = 1, realized if the candidate divisor is "
          "very ample";
    }
  } else {
    const bool large_sigma = ctx.artin_invariant && *ctx.artin_invariant > 6;
    if (ctx.unirational == false || large_sigma) {
      general(large_sigma ? "characteristic 3, Artin invariant > 6"
                          : "characteristic 3, X not unirational");
    } else {
      special(30, Rational(43), "characteristic 3");
    }
  }
  if (restricted && b.counts == "S_d")
    b.notes.push_back("S_d' <= S_d, so the bound also holds for S_d'");
  return b;
}

const std::vector<ExtremalEntry>& extremal_catalog() {
  static const std::vector<ExtremalEntry> table = [] {
    auto sorted = [](std::vector<std::string> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    std::vector<ExtremalEntry> t;
    t.push_back({"I7-I7-IIstar", 7, false, sorted({"I7", "I7", "II*"}), "2A6~ + E8~", "trivial",
                 true, "only extremal elliptic K3 with three fibres supported on the curves"});
    t.push_back({"qe3-3E6t-A2-two-sections", 3, true, sorted({"IV*", "IV*", "IV*", "IV"}),
                 "3E6~ + A2", "Z/3", true, "two sections from the Mordell-Weil group"});
    t.push_back({"qe2-3D6t-2A1", 2, true, sorted({"I*2", "I*2", "I*2", "III", "III"}),
                 "3D6~ + 2A1", "contains Z/2", true, ""});
    t.push_back({"qe2-2E7t-D6t", 2, true, sorted({"III*", "III*", "I*2"}), "2E7~ + D6~", "Z/2",
                 true, ""});
    t.push_back({"qe3-2E6t-E8t", 3, true, sorted({"IV*", "IV*", "II*"}), "2E6~ + E8~", "trivial",
                 true, "at most 24 curves"});
    t.push_back({"qe3-3E6t-A2-mw-trivial", 3, true, sorted({"IV*", "IV*", "IV*", "IV"}),
                 "3E6~ + A2", "trivial", true, "at most 24 curves"});
    t.push_back({"p2-A11t-E6t-A3", 2, false, sorted({"I12", "IV*", "I4"}), "A11~ + E6~ + A3",
                 "Z/3", true, "fewer than three fibres supported on the curves"});
    t.push_back({"qe3-2E6t-E6-A2", 3, true, sorted({"IV*", "IV*", "IV*", "IV"}),
                 "2E6~ + E6 + A2", "Z/3", true, "fewer than three fibres supported on the curves"});
    t.push_back({"qe3-2E6t-4A2", 3, true, sorted({"IV*", "IV*", "IV", "IV", "IV", "IV"}),
                 "2E6~ + 4A2", "Z/3", false,
                 "ruled out: the 3-torsion sections force a section meeting two A2 summands, which "
                 "closes an I0* divisor"});
    t.push_back({"qe3-3E6t-A2-all-sections", 3, true, sorted({"IV*", "IV*", "IV*", "IV"}),
                 "3E6~ + A2", "Z/3", true, "all three sections among the curves"});
    return t;
  }();
  return table;
}

std::vector<ExtremalEntry> extremal_lookup(const FibrationProfile& profile, int characteristic) {
  const auto names = profile.fiber_names();
  std::vector<ExtremalEntry> hits;
  for (const auto& e : extremal_catalog())
    if (e.characteristic == characteristic && e.quasi_elliptic == profile.quasi_elliptic &&
        e.fibers == names)
      hits.push_back(e);
  return hits;
}

VeryAmpleVerdict very_ample_check(const DeclaredModel& model) {
  VeryAmpleVerdict v;
  for (const auto& c : model.curves) {
    if (c.h_dot <= 0)
      v.failed.push_back({1, c.label, "H." + c.label + " = " + std::to_string(c.h_dot) + " <= 0"});
    if (c.pa == 1 && c.h_dot <= 2)
      v.failed.push_back(
          {2, c.label, "genus one curve " + c.label + " has H.E = " + std::to_string(c.h_dot) + " <= 2"});
  }
  if (model.h_square < 4)
    v.failed.push_back({3, "", "H^2 = " + std::to_string(model.h_square) + " < 4"});
  else if (model.h_square == 8 && model.h_two_divisible)
    v.failed.push_back({3, "", "H^2 = 8 and H is 2-divisible"});
  v.pass = v.failed.empty();
  v.notes.push_back("verified on declared classes, not a proof of very-ampleness");
  v.notes.push_back("criterion assumes characteristic != 2");
  return v;
}

}  // namespace k3lat
