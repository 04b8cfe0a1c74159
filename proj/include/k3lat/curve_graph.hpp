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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3lat/rational.hpp"
#include "k3lat/sym_matrix.hpp"

namespace k3lat {

/// A rational curve C with its square C^2 and degree d_C = C.H.
struct CurveVertex {
  std::string id;
  int square = -2;
  int degree = 1;
  friend bool operator==(const CurveVertex&, const CurveVertex&) = default;
};

/// Weighted intersection graph of rational curves. Vertices are ordered;
/// edges carry the intersection number C.C' of two distinct curves.
class CurveConfig {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;  // first < second

  CurveConfig() = default;
  /// Throws ValidationError on duplicate ids, odd or < -2 squares, degree < 1.
  explicit CurveConfig(std::vector<CurveVertex> vertices);

  std::size_t add_vertex(CurveVertex v);
  /// Sets C_a.C_b = mult. Throws ValidationError on loops or bad indices;
  /// mult == 0 removes the edge.
  void set_edge(std::size_t a, std::size_t b, int mult);
  void set_edge(const std::string& a, const std::string& b, int mult);

  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<CurveVertex>& vertices() const noexcept { return vertices_; }
  const CurveVertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const std::map<Edge, int>& edges() const noexcept { return edges_; }
  int multiplicity(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> index_of(const std::string& id) const;
  std::vector<std::size_t> neighbors(std::size_t v) const;
  int max_degree() const;
  std::vector<int> degree_vector() const;

  /// Induced subconfiguration on `idx` (kept in the given order).
  CurveConfig induced(const std::vector<std::size_t>& idx) const;
  /// Disjoint union; ids of `other` get `suffix` appended when they clash.
  CurveConfig disjoint_union(const CurveConfig& other, const std::string& suffix = "'") const;
  /// Vertex index sets of the connected components (edges with mult > 0).
  std::vector<std::vector<std::size_t>> connected_components() const;

  friend bool operator==(const CurveConfig&, const CurveConfig&) = default;

 private:
  void check_vertex(const CurveVertex& v) const;

  std::vector<CurveVertex> vertices_;
  std::map<Edge, int> edges_;
};

/// Gram matrix: diagonal = squares, off-diagonal = edge multiplicities.
SymMatrix gram(const CurveConfig& cfg);

enum class LatticeKind { Elliptic, Parabolic, Hyperbolic, Invalid };

const char* to_string(LatticeKind k);

struct LatticeClass {
  LatticeKind kind = LatticeKind::Elliptic;
  Signature signature;
};

LatticeClass classify_matrix(const SymMatrix& g);
LatticeClass classify(const CurveConfig& cfg);

/// A broken constraint. `slack` is how far the checked quantity exceeds its
/// bound (positive means violated).
struct Violation {
  std::string rule;
  std::vector<std::string> vertices;
  Rational slack;
  std::string message;
};

namespace rules {
inline constexpr const char* kEllipticPairing = "elliptic-pairing";    // C.C' in {0,1}
inline constexpr const char* kEllipticSquare = "elliptic-square";      // C^2 = -2
inline constexpr const char* kParabolicPairing = "parabolic-pairing";  // C.C' in {0,1,2}
inline constexpr const char* kIsotropicOrthogonal = "isotropic-orthogonal";  // D.C = 0
inline constexpr const char* kSignature = "signature";                 // n_plus <= 1
inline constexpr const char* kDegreeCap = "degree-cap";                // d_C <= d
inline constexpr const char* kHodgeSquare = "hodge-square";            // C^2 <= d_C^2 / 2h
inline constexpr const char* kBezout = "bezout";                       // C.C' <= d_C d_C'
inline constexpr const char* kIsotropicPair = "isotropic-pair";        // C.C' <= d_C d_C' / h
inline constexpr const char* kRootPair = "root-pair";                  // C.C' <= 2 for h > 42 d^2
}  // namespace rules

/// Edge-multiplicity constraints implied by the lattice class `cls`
/// (which may be a claimed class, not necessarily classify(cfg)).
std::vector<Violation> validate_pairings(const CurveConfig& cfg, const LatticeClass& cls);

/// Nondegenerate quotient L = M / ker(M) in a basis of vertices.
struct Quotient {
  std::vector<std::size_t> basis;  // vertex indices forming a basis of L
  SymMatrix gram;                  // Gram matrix of L in that basis
  RationalMatrix projection;       // rank x n: column i = image of vertex i
};

Quotient quotient_by_kernel(const CurveConfig& cfg);

/// Hodge-index constraints at polarization degree 2h with degree cap d.
std::vector<Violation> hodge_filter(const CurveConfig& cfg, int d, int h);

/// An integer vector of positive square in the span of the vertices, if any.
std::optional<IntegerVector> positive_witness(const CurveConfig& cfg);

}  // namespace k3lat
