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

namespace k3lat {

/// Solution H of C.H = d_C on L = M / ker(M), in the quotient basis.
struct IntrinsicPolarization {
  bool exists = false;
  std::vector<std::size_t> basis;  // vertex indices spanning L
  SymMatrix gram;                  // Gram matrix of L in that basis
  RationalVector coords;           // valid only when exists
  Rational square;                 // H^2, valid only when exists
};

IntrinsicPolarization intrinsic_polarization(const CurveConfig& cfg);

enum class CertificateKind { IntrinsicSquare, RoughPositiveEntrySum, BoxOptimumDecomposition };

const char* to_string(CertificateKind k);

/// An upper bound on 2h = H^2 for any K3 surface carrying the curves in
/// `basis` (vertex indices of the source configuration).
struct BoundCertificate {
  CertificateKind kind = CertificateKind::RoughPositiveEntrySum;
  Rational bound_on_2h;
  int d = 1;
  std::vector<std::size_t> basis;
  std::vector<std::string> basis_ids;
  SymMatrix gram;          // Gram matrix G on the basis
  SymMatrix gram_inverse;  // G^-1 (unused for IntrinsicSquare)
  // IntrinsicSquare: coords = H in the basis, degrees = pinned degree vector.
  RationalVector coords;
  RationalVector degrees;
  // BoxOptimumDecomposition: G^-1 = g0 + g_plus, x_max = (d, ..., d).
  SymMatrix g0;
  SymMatrix g_plus;
  RationalVector x_max;
  std::string method;  // how the witness was found
};

/// Re-derives the certificate from its payload by independent arithmetic.
/// Returns an empty string when sound, else the first failed check.
std::string verify_certificate(const BoundCertificate& cert);

/// Sum of max(0, g_ij) d^2 over G^-1. Throws DegenerateLattice if gram(cfg)
/// has a kernel and std::domain_error if it is not hyperbolic.
BoundCertificate rough_bound(const CurveConfig& cfg, int d);

/// G^-1 = G0 + G+ with G0 <= 0, G0 (1,...,1) = 0, G+ >= 0 entrywise; bound
/// d^2 * (entry sum of G^-1). Throws NoDecompositionFound if no split is
/// found, DegenerateLattice / std::domain_error as rough_bound.
BoundCertificate box_certificate(const CurveConfig& cfg, int d);

/// Same two certificates for an arbitrary nondegenerate hyperbolic Gram
/// matrix on a basis (used for subgraphs and quotients).
BoundCertificate rough_bound_for(const SymMatrix& g, int d);
std::optional<BoundCertificate> box_certificate_for(const SymMatrix& g, int d);

enum class Verdict {
  EllipticAdmissible,
  EllipticExcluded,
  ParabolicFibration,
  HyperbolicExcluded,
  HyperbolicUndecided,
  InvalidSignature,
};

const char* to_string(Verdict v);

struct ExclusionVerdict {
  Verdict status = Verdict::HyperbolicUndecided;
  std::vector<BoundCertificate> certificates;
  std::vector<std::string> notes;
  std::size_t subgraphs_examined = 0;
};

enum class DegreeMode {
  CapOnly,  // only d_C <= d is known: rough / box bounds
  Pinned,   // the configuration's degree vector is exact: intrinsic square
};

inline constexpr int kDefaultSubgraphCap = 13;

/// Decides whether the configuration can live on a K3 surface of degree 2h
/// with all curve degrees <= d. Hyperbolic input is tested on connected
/// hyperbolic subgraphs of at most `subgraph_cap` vertices in order of
/// (size, lexicographic vertex set); exclusion needs bound_on_2h < 2h.
ExclusionVerdict exclude(const CurveConfig& cfg, int d, int h,
                         int subgraph_cap = kDefaultSubgraphCap,
                         DegreeMode mode = DegreeMode::CapOnly);

/// Largest admissible h, or nullopt for "unbounded".
struct HRange {
  std::optional<Integer> max_h;
  std::string note;
};

HRange admissible_h_range(const CurveConfig& cfg, int d);

}  // namespace k3lat
