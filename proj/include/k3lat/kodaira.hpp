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

#include "k3lat/curve_graph.hpp"
#include "k3lat/root_systems.hpp"

namespace k3lat {

/// Kodaira fibre tags. The two merged tags are what an intersection graph can
/// report: I2 and III (resp. I3 and IV) have the same dual graph.
enum class KodairaTag { I, IStar, II, III, IV, IVStar, IIIStar, IIStar, I2OrIII, I3OrIV };

enum class Reduction { Multiplicative, Additive, Ambiguous, Smooth };

/// Table record for a fibre type. For merged tags the Euler number is the
/// range [euler_min, euler_max]; otherwise both bounds agree.
struct KodairaType {
  KodairaTag tag = KodairaTag::I;
  int n = 0;  // index for I(n) and I*(n)
  std::vector<int> multiplicities;
  int components = 0;
  int weight = 0;
  int euler_min = 0;
  int euler_max = 0;
  Reduction reduction = Reduction::Multiplicative;

  bool is_additive() const noexcept { return reduction == Reduction::Additive; }
  int euler() const noexcept { return euler_max; }
  std::string name() const;
  friend bool operator==(const KodairaType& a, const KodairaType& b) {
    return a.tag == b.tag && a.n == b.n;
  }
};

/// Fills the record for a tag. Multiplicities are in the canonical vertex
/// order of standard_diagram() for the corresponding affine diagram:
///   I(n)   cycle, all 1
///   I*(n)  1, 1, 2 x (n + 1), 1, 1
///   IV*    3, 2, 1, 2, 1, 2, 1
///   III*   4, 2, 3, 2, 1, 3, 2, 1
///   II*    6, 3, 4, 2, 5, 4, 3, 2, 1
/// I(0) is the smooth fibre: one component, weight 1, Euler number 0.
/// Throws std::invalid_argument for a negative index.
KodairaType type_table(KodairaTag tag, int n = 0);

/// Parses names such as "I4", "I*2", "I2*", "II", "IV*", "III*", "II*".
KodairaType parse_kodaira_type(const std::string& name);

/// Kodaira type carried by an affine component (isotropic vertex -> I(1)).
KodairaType kodaira_type_of(RootKind kind, int rank);

/// D = sum n_i C_i on an induced subgraph.
struct KodairaDivisor {
  KodairaType type;
  std::vector<std::size_t> support;  // sorted vertex indices
  std::vector<std::string> ids;
  std::vector<int> multiplicities;   // aligned with support
  bool nodal_or_cuspidal = false;    // single isotropic curve: I(1) or II

  int weight() const;
};

/// All minimal-support Kodaira divisors (connected induced affine subgraphs
/// and isotropic vertices), ordered by (weight, support). Without a cap the
/// search is exhaustive for elliptic/parabolic input and capped at weight 30
/// for hyperbolic input.
std::vector<KodairaDivisor> find_kodaira_divisors(const CurveConfig& cfg,
                                                  std::optional<int> max_weight = std::nullopt);

/// deg(D) = sum n_i d_{C_i}.
long divisor_degree(const KodairaDivisor& div, const CurveConfig& cfg);

/// D.C for a vertex C.
long divisor_pairing(const KodairaDivisor& div, const CurveConfig& cfg, std::size_t vertex);

namespace rules {
inline constexpr const char* kKodaira6d = "kodaira-degree-6d";      // deg(D) > 6d
inline constexpr const char* kFibreOrthogonal = "fibre-orthogonal";  // D.C = 0
}  // namespace rules

struct ExclusionReport {
  std::vector<Violation> violations;
  std::vector<std::string> notes;
};

/// For hyperbolic configurations at h > 42 d^2: every Kodaira divisor of
/// degree <= 6d is a violation, as is every curve meeting one positively.
ExclusionReport exclusion_6d(const CurveConfig& cfg, int d, int h);

const char* to_string(KodairaTag t);

}  // namespace k3lat
