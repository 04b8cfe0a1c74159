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
#include <vector>

#include "k3lat/kodaira.hpp"
#include "k3lat/rational.hpp"

namespace k3lat {

struct FiberInstance {
  KodairaType type;
  int delta = 0;  // wild ramification
};

struct FibrationProfile {
  std::vector<FiberInstance> fibers;
  bool quasi_elliptic = false;
  int characteristic = 0;

  /// `count` copies of `type` with the given delta.
  void add(const KodairaType& type, int count = 1, int delta = 0);
  /// Sorted fibre names, smooth fibres dropped, e.g. {"I7", "I7", "II*"}.
  std::vector<std::string> fiber_names() const;
};

/// Throws ValidationError on structural breaches (negative delta, delta on a
/// multiplicative fibre, quasi-elliptic outside p = 2, 3, ambiguous types).
/// Returns warnings for permitted but unchecked combinations.
std::vector<std::string> validate_profile(const FibrationProfile& profile);

struct BudgetReport {
  bool ok = false;
  int euler_total = 0;  // left side of the Euler identity for the mode
  int target = 24;
  int components = 0;   // sum of m_t
  int reducible = 0;    // fibres with m_t >= 2
  std::vector<std::string> notes;
};

BudgetReport budget_check(const FibrationProfile& profile);

/// d_all_leq_d = true: the exact count for this profile. false: the ceiling
/// for the profile's mode (24, 40 or 30).
int rational_component_bound(const FibrationProfile& profile, bool d_all_leq_d = true);

int shioda_tate_rank(const FibrationProfile& profile, int mw_rank = 0);

/// k x I(n) with n k = 24, n >= 2, Shioda-Tate rank <= rho_max; increasing n.
std::vector<FibrationProfile> enumerate_uniform(int rho_max);

struct SurfaceContext {
  int characteristic = 0;
  std::optional<bool> unirational;
  std::optional<int> artin_invariant;
  int rho_max = 22;
};

/// Throws UnsupportedContext on inconsistent fields.
void validate_context(const SurfaceContext& ctx);

struct SdBound {
  int bound = 24;
  Rational h_threshold;  // coefficient c: the bound needs h > c d^2
  std::string counts;    // "S_d" or "S_d'"
  std::vector<std::string> hypotheses;
  std::vector<std::string> notes;
  std::optional<int> conjectural_lines;  // expected, not proven
  std::string conjectural_note;
};

SdBound sd_bound(const SurfaceContext& ctx, bool restricted = false);

struct ExtremalEntry {
  std::string key;
  int characteristic = 0;
  bool quasi_elliptic = false;
  std::vector<std::string> fibers;  // sorted fibre names
  std::string lattice;              // root lattice description
  std::string mordell_weil;
  bool realized = true;
  std::string note;
};

const std::vector<ExtremalEntry>& extremal_catalog();

std::vector<ExtremalEntry> extremal_lookup(const FibrationProfile& profile, int characteristic);

struct DeclaredCurve {
  std::string label;
  int pa = 0;
  long h_dot = 0;
};

struct DeclaredModel {
  std::vector<DeclaredCurve> curves;
  long h_square = 0;
  bool h_two_divisible = false;
};

struct FailedCondition {
  int condition = 0;  // 1, 2 or 3
  std::string label;  // curve label, empty for condition 3
  std::string message;
};

struct VeryAmpleVerdict {
  bool pass = false;
  std::vector<FailedCondition> failed;
  std::vector<std::string> notes;
};

VeryAmpleVerdict very_ample_check(const DeclaredModel& model);

}  // namespace k3lat
