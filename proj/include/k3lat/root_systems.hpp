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

enum class RootKind { A, D, E, AffineA, AffineD, AffineE, IsotropicVertex, A1Tilde };

/// A recognized connected piece of a negative (semi-)definite configuration.
/// `rank` is the subscript (A(n): n, AffineD(n): n, E(k): k); 1 for A1Tilde
/// and 0 for an isotropic vertex.
struct RootComponent {
  RootKind kind = RootKind::A;
  int rank = 0;
  std::vector<std::size_t> vertices;  // indices into the source configuration
  std::vector<std::string> ids;
  std::optional<IntegerVector> kernel;  // aligned with `vertices`

  bool is_affine() const noexcept;
  bool is_definite() const noexcept;
  /// Rank of the nondegenerate part: n for ADE and affine kinds, 1 for A1Tilde.
  int lattice_rank() const noexcept;
  std::string name() const;
};

struct Decomposition {
  std::vector<RootComponent> components;
  std::vector<std::vector<std::size_t>> unrecognized;
};

/// Shape recognition of a connected configuration (all vertices in order).
/// The returned kernel, if any, is in the configuration's vertex order.
struct Recognition {
  RootKind kind;
  int rank;
  std::optional<IntegerVector> kernel;
};
std::optional<Recognition> recognize_shape(const CurveConfig& connected);

/// Splits a negative (semi-)definite configuration into ADE, affine and
/// isotropic pieces. Throws NotNegativeSemidefinite for hyperbolic input.
Decomposition decompose(const CurveConfig& cfg);

/// True iff the definite part fits in a hyperbolic lattice of rank rho_max,
/// i.e. total rank <= rho_max - 1.
bool max_rank_check(const Decomposition& dec, int rho_max);

/// Standard diagram in canonical vertex order:
///   A(n)        path
///   D(n)        two leaves, then the chain starting at their common neighbour
///   E(k)        centre, arm of length 1, arm of length 2, arm of length k - 4
///   AffineA(n)  cycle of n + 1 vertices (n >= 2)
///   AffineD(n)  two leaves, chain of n - 3 vertices, two leaves
///   AffineE(6)  centre, three arms of length 2
///   AffineE(7)  centre, arm of length 1, two arms of length 3
///   AffineE(8)  centre, arms of length 1, 2, 5
///   A1Tilde     two vertices, double edge
///   IsotropicVertex  one vertex of square 0
/// Throws std::invalid_argument for unsupported (kind, n).
CurveConfig standard_diagram(RootKind kind, int n);

/// Standard kernel multiplicities of an affine kind in canonical order.
IntegerVector standard_kernel(RootKind kind, int n);

const char* to_string(RootKind k);

}  // namespace k3lat
