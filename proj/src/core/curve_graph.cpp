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

#include "k3lat/curve_graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "k3lat/errors.hpp"

namespace k3lat {

CurveConfig::CurveConfig(std::vector<CurveVertex> vertices) {
  for (auto& v : vertices) add_vertex(std::move(v));
}

void CurveConfig::check_vertex(const CurveVertex& v) const {
  if (v.id.empty()) throw ValidationError("vertex with empty id");
  if (index_of(v.id)) throw ValidationError("duplicate vertex id '" + v.id + "'");
  if (v.square % 2 != 0)
    throw ValidationError("vertex '" + v.id + "' has odd square " + std::to_string(v.square));
  if (v.square < -2)
    throw ValidationError("vertex '" + v.id + "' has square " + std::to_string(v.square) +
                          " < -2");
  if (v.degree < 1)
    throw ValidationError("vertex '" + v.id + "' has degree " + std::to_string(v.degree) +
                          " < 1");
}

std::size_t CurveConfig::add_vertex(CurveVertex v) {
  check_vertex(v);
  vertices_.push_back(std::move(v));
  return vertices_.size() - 1;
}

void CurveConfig::set_edge(std::size_t a, std::size_t b, int mult) {
  if (a >= size() || b >= size()) throw ValidationError("edge references a missing vertex");
  if (a == b) throw ValidationError("loop at vertex '" + vertices_[a].id + "'");
  if (mult < 0) throw ValidationError("negative edge multiplicity");
  const Edge e = std::minmax(a, b);
  if (mult == 0)
    edges_.erase(e);
  else
    edges_[e] = mult;
}

void CurveConfig::set_edge(const std::string& a, const std::string& b, int mult) {
  const auto ia = index_of(a);
  const auto ib = index_of(b);
  if (!ia) throw ValidationError("edge references unknown vertex '" + a + "'");
  if (!ib) throw ValidationError("edge references unknown vertex '" + b + "'");
  set_edge(*ia, *ib, mult);
}

int CurveConfig::multiplicity(std::size_t a, std::size_t b) const {
  if (a == b) return vertices_.at(a).square;
  auto it = edges_.find(std::minmax(a, b));
  return it == edges_.end() ? 0 : it->second;
}

std::optional<std::size_t> CurveConfig::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return i;
  return std::nullopt;
}

std::vector<std::size_t> CurveConfig::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (const auto& [e, m] : edges_) {
    if (e.first == v) out.push_back(e.second);
    if (e.second == v) out.push_back(e.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int CurveConfig::max_degree() const {
  int d = 0;
  for (const auto& v : vertices_) d = std::max(d, v.degree);
  return d;
}

std::vector<int> CurveConfig::degree_vector() const {
  std::vector<int> d;
  for (const auto& v : vertices_) d.push_back(v.degree);
  return d;
}

CurveConfig CurveConfig::induced(const std::vector<std::size_t>& idx) const {
  CurveConfig sub;
  for (auto i : idx) sub.add_vertex(vertices_.at(i));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (int m = multiplicity(idx[a], idx[b]); m != 0) sub.set_edge(a, b, m);
  return sub;
}

CurveConfig CurveConfig::disjoint_union(const CurveConfig& other,
                                        const std::string& suffix) const {
  CurveConfig out = *this;
  const std::size_t offset = size();
  for (auto v : other.vertices_) {
    while (out.index_of(v.id)) v.id += suffix;
    out.add_vertex(std::move(v));
  }
  for (const auto& [e, m] : other.edges_) out.set_edge(e.first + offset, e.second + offset, m);
  return out;
}

std::vector<std::vector<std::size_t>> CurveConfig::connected_components() const {
  std::vector<int> comp(size(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> members{s}, stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto w : neighbors(v))
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

SymMatrix gram(const CurveConfig& cfg) {
  SymMatrix g(cfg.size());
  for (std::size_t i = 0; i < cfg.size(); ++i) g.set(i, i, cfg.vertex(i).square);
  for (const auto& [e, m] : cfg.edges()) g.set(e.first, e.second, m);
  return g;
}

const char* to_string(LatticeKind k) {
  switch (k) {
    case LatticeKind::Elliptic: return "Elliptic";
    case LatticeKind::Parabolic: return "Parabolic";
    case LatticeKind::Hyperbolic: return "Hyperbolic";
    case LatticeKind::Invalid: return "Invalid";
  }
  return "?";
}

LatticeClass classify_matrix(const SymMatrix& g) {
  LatticeClass c;
  c.signature = signature(g);
  if (c.signature.n_plus >= 2)
    c.kind = LatticeKind::Invalid;
  else if (c.signature.n_plus == 1)
    c.kind = LatticeKind::Hyperbolic;
  else if (c.signature.n_zero > 0)
    c.kind = LatticeKind::Parabolic;
  else
    c.kind = LatticeKind::Elliptic;
  return c;
}

LatticeClass classify(const CurveConfig& cfg) { return classify_matrix(gram(cfg)); }

std::vector<Violation> validate_pairings(const CurveConfig& cfg, const LatticeClass& cls) {
  std::vector<Violation> out;
  const auto& vs = cfg.vertices();
  switch (cls.kind) {
    case LatticeKind::Elliptic:
      for (const auto& v : vs)
        if (v.square != -2)
          out.push_back({rules::kEllipticSquare, {v.id}, Rational(v.square + 2),
                         "C^2 = -2 required for elliptic configurations"});
      for (const auto& [e, m] : cfg.edges())
        if (m > 1)
          out.push_back({rules::kEllipticPairing, {vs[e.first].id, vs[e.second].id},
                         Rational(m - 1), "C.C' in {0,1} required (else (C+C')^2 >= 0)"});
      break;
    case LatticeKind::Parabolic:
      for (const auto& [e, m] : cfg.edges()) {
        const auto& a = vs[e.first];
        const auto& b = vs[e.second];
        if (a.square == 0 || b.square == 0)
          out.push_back({rules::kIsotropicOrthogonal, {a.id, b.id}, Rational(m),
                         "D.C = 0 required for isotropic D (else (2D +- C)^2 > 0)"});
        else if (m > 2)
          out.push_back({rules::kParabolicPairing, {a.id, b.id}, Rational(m - 2),
                         "C.C' in {0,1,2} required for parabolic configurations"});
      }
      break;
    case LatticeKind::Hyperbolic:
      break;
    case LatticeKind::Invalid:
      out.push_back({rules::kSignature, {},
                     Rational(static_cast<long>(cls.signature.n_plus) - 1),
                     "two or more positive directions contradict the Hodge index theorem"});
      break;
  }
  return out;
}

Quotient quotient_by_kernel(const CurveConfig& cfg) {
  const SymMatrix g = gram(cfg);
  Quotient q;
  q.basis = pivot_columns(g);
  q.gram = g.principal_submatrix(q.basis);
  const std::size_t r = q.basis.size();
  q.projection.assign(r, RationalVector(cfg.size()));
  if (r == 0) return q;
  const SymMatrix inv = inverse(q.gram);
  for (std::size_t v = 0; v < cfg.size(); ++v) {
    RationalVector pairing(r);
    for (std::size_t k = 0; k < r; ++k) pairing[k] = g(q.basis[k], v);
    const RationalVector coords = multiply(inv, pairing);
    for (std::size_t k = 0; k < r; ++k) q.projection[k][v] = coords[k];
  }
  return q;
}

std::vector<Violation> hodge_filter(const CurveConfig& cfg, int d, int h) {
  if (d < 1 || h < 1) throw std::invalid_argument("d and h must be positive");
  std::vector<Violation> out;
  const auto& vs = cfg.vertices();
  const Rational two_h(2 * h);
  const bool high_degree = Integer(h) > Integer(42) * d * d;

  for (const auto& v : vs) {
    if (v.degree > d)
      out.push_back({rules::kDegreeCap, {v.id}, Rational(v.degree - d), "d_C <= d required"});
    const Rational bound = Rational(v.degree) * v.degree / two_h;
    if (Rational(v.square) > bound)
      out.push_back({rules::kHodgeSquare, {v.id}, Rational(v.square) - bound,
                     "C^2 <= (C.H)^2 / H^2 required by the Hodge index theorem"});
  }
  for (const auto& [e, m] : cfg.edges()) {
    const auto& a = vs[e.first];
    const auto& b = vs[e.second];
    const Rational product(a.degree * b.degree);
    if (Rational(m) > product)
      out.push_back({rules::kBezout, {a.id, b.id}, Rational(m) - product,
                     "C.C' <= d_C d_C' required"});
    if (a.square >= 0 && b.square >= 0) {
      const Rational bound = product / h;
      if (Rational(m) > bound)
        out.push_back({rules::kIsotropicPair, {a.id, b.id}, Rational(m) - bound,
                       "C.C' <= d_C d_C' / h for non-negative squares (C.C' = 0 for isotropic "
                       "pairs)"});
    }
    if (high_degree && a.square == -2 && b.square == -2 && m > 2)
      out.push_back({rules::kRootPair, {a.id, b.id}, Rational(m - 2),
                     "C.C' <= 2 for (-2)-curves when h > 42 d^2"});
  }
  return out;
}

std::optional<IntegerVector> positive_witness(const CurveConfig& cfg) {
  const auto dz = diagonalize(gram(cfg));
  for (std::size_t k = 0; k < dz.diagonal.size(); ++k)
    if (sgn(dz.diagonal[k]) > 0) return primitive_integer_vector(dz.transform[k]);
  return std::nullopt;
}

}  // namespace k3lat
