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

#include "k3lat/bounds.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "k3lat/errors.hpp"
#include "k3lat/exact_lp.hpp"

namespace k3lat {

const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::IntrinsicSquare: return "IntrinsicSquare";
    case CertificateKind::RoughPositiveEntrySum: return "RoughPositiveEntrySum";
    case CertificateKind::BoxOptimumDecomposition: return "BoxOptimumDecomposition";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::EllipticAdmissible: return "EllipticAdmissible";
    case Verdict::EllipticExcluded: return "EllipticExcluded";
    case Verdict::ParabolicFibration: return "ParabolicFibration";
    case Verdict::HyperbolicExcluded: return "HyperbolicExcluded";
    case Verdict::HyperbolicUndecided: return "HyperbolicUndecided";
    case Verdict::InvalidSignature: return "InvalidSignature";
  }
  return "?";
}

IntrinsicPolarization intrinsic_polarization(const CurveConfig& cfg) {
  IntrinsicPolarization ip;
  const auto q = quotient_by_kernel(cfg);
  ip.basis = q.basis;
  ip.gram = q.gram;
  const auto deg = cfg.degree_vector();
  // Solvable iff the degree vector vanishes on ker(M).
  for (const auto& k : kernel_basis(gram(cfg))) {
    Integer pairing = 0;
    for (std::size_t i = 0; i < k.size(); ++i) pairing += k[i] * deg[i];
    if (pairing != 0) return ip;
  }
  RationalVector rhs;
  for (auto v : q.basis) rhs.emplace_back(deg[v]);
  ip.exists = true;
  ip.coords = q.basis.empty() ? RationalVector{} : solve(q.gram, rhs);
  ip.square = dot(ip.coords, rhs);
  return ip;
}

namespace {

SymMatrix checked_inverse(const SymMatrix& g) {
  const Signature sig = signature(g);
  if (sig.n_zero > 0) throw DegenerateLattice("Gram matrix has a kernel");
  if (sig.n_plus != 1) throw std::domain_error("lattice is not hyperbolic");
  return inverse(g);
}

Rational d_squared(int d) { return Rational(d) * d; }

bool entrywise_nonnegative(const SymMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j)
      if (sgn(m(i, j)) < 0) return false;
  return true;
}

BoundCertificate box_from_split(const SymMatrix& g, const SymMatrix& inv, SymMatrix g0, int d,
                                std::string method) {
  BoundCertificate c;
  c.kind = CertificateKind::BoxOptimumDecomposition;
  c.d = d;
  c.gram = g;
  c.gram_inverse = inv;
  c.g_plus = inv - g0;
  c.g0 = std::move(g0);
  c.x_max.assign(g.size(), Rational(d));
  c.bound_on_2h = d_squared(d) * inv.entry_sum();
  c.method = std::move(method);
  return c;
}

// Negative entries of G^-1 confined to disjoint 2x2 principal blocks B, each
// paired with a partner index pair Q: G0 carries B on P and Q and -B across,
// so x^T G0 x = (x_P - x_Q)^T B (x_P - x_Q).
std::optional<SymMatrix> paired_block_split(const SymMatrix& inv) {
  const std::size_t n = inv.size();
  std::vector<int> block_of(n, -1);
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (sgn(inv(i, j)) >= 0) continue;
      if (i == j) continue;
      if (block_of[i] >= 0 || block_of[j] >= 0) {
        if (block_of[i] != block_of[j] || block_of[i] < 0) return std::nullopt;
        continue;
      }
      block_of[i] = block_of[j] = static_cast<int>(blocks.size());
      blocks.emplace_back(i, j);
    }
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(inv(i, i)) < 0 && block_of[i] < 0) return std::nullopt;
  for (const auto& [i, j] : blocks) {
    if (sgn(inv(i, i)) >= 0 || sgn(inv(j, j)) >= 0) return std::nullopt;
    if (inv(i, i) * inv(j, j) < inv(i, j) * inv(i, j)) return std::nullopt;  // B not <= 0
  }
  if (blocks.empty()) return std::nullopt;

  SymMatrix g0(n);
  std::vector<bool> used(n, false);
  std::vector<bool> matched(blocks.size(), false);

  auto fits = [&](std::size_t p0, std::size_t p1, std::size_t q0, std::size_t q1) {
    const std::size_t p[2] = {p0, p1}, q[2] = {q0, q1};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        const Rational& bv = inv(p[a], p[b]);
        if (inv(q[a], q[b]) - bv < 0) return false;
        if (inv(p[a], q[b]) + bv < 0) return false;
      }
    return true;
  };
  auto place = [&](std::size_t p0, std::size_t p1, std::size_t q0, std::size_t q1) {
    const std::size_t p[2] = {p0, p1}, q[2] = {q0, q1};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        const Rational bv = inv(p[a], p[b]);
        g0.set(p[a], p[b], bv);
        g0.set(q[a], q[b], bv);
        g0.set(p[a], q[b], -bv);
      }
    for (auto v : {p0, p1, q0, q1}) used[v] = true;
  };

  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    if (matched[bi]) continue;
    const auto [p0, p1] = blocks[bi];
    bool done = false;
    // Prefer another negative block as partner, in either orientation.
    for (std::size_t bj = bi + 1; bj < blocks.size() && !done; ++bj) {
      if (matched[bj]) continue;
      const auto [q0, q1] = blocks[bj];
      for (auto [a, b] : {std::pair{q0, q1}, std::pair{q1, q0}})
        if (fits(p0, p1, a, b)) {
          place(p0, p1, a, b);
          matched[bi] = matched[bj] = true;
          done = true;
          break;
        }
    }
    for (std::size_t a = 0; a < n && !done; ++a)
      for (std::size_t b = 0; b < n && !done; ++b) {
        if (a == b || used[a] || used[b] || block_of[a] >= 0 || block_of[b] >= 0) continue;
        if (a == p0 || a == p1 || b == p0 || b == p1) continue;
        if (fits(p0, p1, a, b)) {
          place(p0, p1, a, b);
          matched[bi] = true;
          done = true;
        }
      }
    if (!done) return std::nullopt;
  }
  return g0;
}

// G0 = -sum c_a a a^T over balanced vectors a (sum of entries 0), found by an
// exact LP subject to G0 <= G^-1 entrywise.
std::optional<SymMatrix> lp_split(const SymMatrix& inv) {
  const std::size_t n = inv.size();
  std::vector<std::vector<std::pair<std::size_t, int>>> dict;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) dict.push_back({{i, 1}, {j, -1}});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sgn(inv(i, j)) >= 0) continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          if (k == i || k == j || l == i || l == j) continue;
          dict.push_back({{i, 1}, {j, 1}, {k, -1}, {l, -1}});
        }
    }

  std::vector<std::pair<std::size_t, std::size_t>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) rows.emplace_back(i, j);
  std::vector<std::vector<std::size_t>> row_index(n, std::vector<std::size_t>(n));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    row_index[rows[r].first][rows[r].second] = r;
    row_index[rows[r].second][rows[r].first] = r;
  }

  RationalMatrix a(rows.size(), RationalVector(dict.size()));
  RationalVector b(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) b[r] = inv(rows[r].first, rows[r].second);
  for (std::size_t c = 0; c < dict.size(); ++c) {
    const auto& vec = dict[c];
    for (std::size_t s = 0; s < vec.size(); ++s)
      for (std::size_t t = s; t < vec.size(); ++t) {
        const auto r = row_index[vec[s].first][vec[t].first];
        a[r][c] -= vec[s].second * vec[t].second;
      }
  }
  const auto x = find_feasible_point(a, b);
  if (!x) return std::nullopt;

  SymMatrix g0(n);
  for (std::size_t c = 0; c < dict.size(); ++c) {
    if (sgn((*x)[c]) == 0) continue;
    const auto& vec = dict[c];
    for (const auto& [i, si] : vec)
      for (const auto& [j, sj] : vec)
        if (i <= j) g0.set(i, j, g0(i, j) - (*x)[c] * si * sj);
  }
  return g0;
}

}  // namespace

BoundCertificate rough_bound_for(const SymMatrix& g, int d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  BoundCertificate c;
  c.kind = CertificateKind::RoughPositiveEntrySum;
  c.d = d;
  c.gram = g;
  c.gram_inverse = checked_inverse(g);
  c.bound_on_2h = d_squared(d) * c.gram_inverse.positive_entry_sum();
  c.method = "positive entries of the inverse Gram matrix";
  return c;
}

std::optional<BoundCertificate> box_certificate_for(const SymMatrix& g, int d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  const SymMatrix inv = checked_inverse(g);
  std::vector<BoundCertificate> candidates;
  if (entrywise_nonnegative(inv)) {
    candidates.push_back(box_from_split(g, inv, SymMatrix(g.size()), d, "nonnegative inverse"));
  } else {
    if (auto g0 = paired_block_split(inv))
      candidates.push_back(box_from_split(g, inv, std::move(*g0), d, "paired 2x2 blocks"));
    if (candidates.empty() || !verify_certificate(candidates.back()).empty())
      if (auto g0 = lp_split(inv))
        candidates.push_back(box_from_split(g, inv, std::move(*g0), d, "exact LP over balanced rank-one terms"));
  }
  for (auto& c : candidates)
    if (verify_certificate(c).empty()) return std::move(c);
  return std::nullopt;
}

namespace {

void attach_basis(BoundCertificate& c, const CurveConfig& cfg, std::vector<std::size_t> basis) {
  for (auto v : basis) c.basis_ids.push_back(cfg.vertex(v).id);
  c.basis = std::move(basis);
}

std::vector<std::size_t> all_vertices(const CurveConfig& cfg) {
  std::vector<std::size_t> v(cfg.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

}  // namespace

BoundCertificate rough_bound(const CurveConfig& cfg, int d) {
  auto c = rough_bound_for(gram(cfg), d);
  attach_basis(c, cfg, all_vertices(cfg));
  return c;
}

BoundCertificate box_certificate(const CurveConfig& cfg, int d) {
  auto c = box_certificate_for(gram(cfg), d);
  if (!c) throw NoDecompositionFound("no G0 + G+ split of the inverse Gram matrix was found");
  attach_basis(*c, cfg, all_vertices(cfg));
  return std::move(*c);
}

std::string verify_certificate(const BoundCertificate& c) {
  const std::size_t n = c.gram.size();
  const Rational dd = d_squared(c.d);
  switch (c.kind) {
    case CertificateKind::IntrinsicSquare: {
      if (c.coords.size() != n || c.degrees.size() != n) return "payload dimension mismatch";
      if (multiply(c.gram, c.coords) != c.degrees) return "G H != degree vector";
      if (quadratic(c.gram, c.coords) != c.bound_on_2h) return "H^2 != stated bound";
      return {};
    }
    case CertificateKind::RoughPositiveEntrySum:
    case CertificateKind::BoxOptimumDecomposition: {
      if (c.gram_inverse.size() != n) return "payload dimension mismatch";
      const RationalMatrix prod = multiply(c.gram, c.gram_inverse);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (prod[i][j] != (i == j ? 1 : 0)) return "G G^-1 != identity";
      if (c.kind == CertificateKind::RoughPositiveEntrySum) {
        Rational s = 0;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (c.gram_inverse(i, j) > 0) s += c.gram_inverse(i, j);
        if (s * dd != c.bound_on_2h) return "positive entry sum != stated bound";
        return {};
      }
      if (c.g0.size() != n || c.g_plus.size() != n || c.x_max.size() != n)
        return "payload dimension mismatch";
      if (c.g0 + c.g_plus != c.gram_inverse) return "G0 + G+ != G^-1";
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (c.g_plus(i, j) < 0) return "G+ has a negative entry";
      if (signature(c.g0).n_plus != 0) return "G0 is not negative semi-definite";
      if (multiply(c.g0, RationalVector(n, Rational(1))) != RationalVector(n))
        return "(1,...,1) is not in ker(G0)";
      for (const auto& x : c.x_max)
        if (x != c.d) return "x_max != (d,...,d)";
      if (quadratic(c.gram_inverse, c.x_max) != c.bound_on_2h) return "x_max^T G^-1 x_max != bound";
      if (dd * c.gram_inverse.entry_sum() != c.bound_on_2h) return "d^2 * entry sum != bound";
      return {};
    }
  }
  return "unknown certificate kind";
}

namespace {

// Connected induced vertex sets of size <= cap, each once, sorted by
// (size, lexicographic).
std::vector<std::vector<std::size_t>> connected_subsets(const CurveConfig& cfg, std::size_t cap) {
  std::vector<std::vector<std::size_t>> adj;
  for (std::size_t v = 0; v < cfg.size(); ++v) adj.push_back(cfg.neighbors(v));
  std::vector<std::vector<std::size_t>> out;

  std::function<void(std::vector<std::size_t>, std::vector<std::size_t>, std::size_t)> extend =
      [&](std::vector<std::size_t> sub, std::vector<std::size_t> ext, std::size_t root) {
        auto sorted = sub;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(std::move(sorted));
        if (sub.size() >= cap) return;
        while (!ext.empty()) {
          const std::size_t w = ext.back();
          ext.pop_back();
          auto next_ext = ext;
          for (auto u : adj[w]) {
            if (u <= root) continue;
            if (std::find(sub.begin(), sub.end(), u) != sub.end()) continue;
            if (std::find(next_ext.begin(), next_ext.end(), u) != next_ext.end()) continue;
            bool touches = false;
            for (auto s : sub)
              if (cfg.multiplicity(s, u) != 0) touches = true;
            if (!touches) next_ext.push_back(u);
          }
          auto next_sub = sub;
          next_sub.push_back(w);
          extend(std::move(next_sub), std::move(next_ext), root);
        }
      };
  if (cap == 0) return out;
  for (std::size_t v = 0; v < cfg.size(); ++v) {
    std::vector<std::size_t> ext;
    for (auto u : adj[v])
      if (u > v) ext.push_back(u);
    extend({v}, std::move(ext), v);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

ExclusionVerdict exclude(const CurveConfig& cfg, int d, int h, int subgraph_cap,
                         DegreeMode mode) {
  if (d < 1 || h < 1) throw std::invalid_argument("d and h must be positive");
  if (subgraph_cap < 1) throw std::invalid_argument("subgraph cap must be positive");
  if (cfg.max_degree() > d) throw std::invalid_argument("a vertex degree exceeds d");

  ExclusionVerdict v;
  const auto cls = classify(cfg);
  switch (cls.kind) {
    case LatticeKind::Elliptic:
      v.status = cfg.size() <= 21 ? Verdict::EllipticAdmissible : Verdict::EllipticExcluded;
      v.notes.push_back(cfg.size() <= 21 ? "elliptic: #curves <= 21"
                                         : "elliptic with more than 21 curves exceeds rank 21");
      return v;
    case LatticeKind::Parabolic:
      v.status = Verdict::ParabolicFibration;
      v.notes.push_back("parabolic: curves are fibre components of a genus one fibration");
      return v;
    case LatticeKind::Invalid:
      v.status = Verdict::InvalidSignature;
      v.notes.push_back("two positive directions: not realizable in a Picard lattice");
      return v;
    case LatticeKind::Hyperbolic:
      break;
  }

  const Rational two_h(2 * h);
  std::optional<BoundCertificate> best;
  auto consider_best = [&](const BoundCertificate& c) {
    if (!best || c.bound_on_2h < best->bound_on_2h) best = c;
  };
  // Subgraph with the smallest entry sum whose box split was not attempted.
  std::optional<std::pair<Rational, std::vector<std::size_t>>> box_candidate;

  for (const auto& sub : connected_subsets(cfg, static_cast<std::size_t>(subgraph_cap))) {
    const CurveConfig induced = cfg.induced(sub);
    const SymMatrix g = gram(induced);
    if (classify_matrix(g).kind != LatticeKind::Hyperbolic) continue;
    ++v.subgraphs_examined;

    const Quotient q = quotient_by_kernel(induced);
    std::vector<std::size_t> basis;
    for (auto b : q.basis) basis.push_back(sub[b]);

    if (mode == DegreeMode::Pinned) {
      const auto ip = intrinsic_polarization(induced);
      if (!ip.exists) {
        v.notes.push_back("intrinsic polarization does not exist on a hyperbolic subgraph");
        continue;
      }
      BoundCertificate c;
      c.kind = CertificateKind::IntrinsicSquare;
      c.d = d;
      c.gram = ip.gram;
      c.coords = ip.coords;
      for (auto b : ip.basis) c.degrees.emplace_back(induced.vertex(b).degree);
      c.bound_on_2h = ip.square;
      c.method = "pinned degree vector";
      attach_basis(c, cfg, basis);
      if (c.bound_on_2h < two_h) {
        v.status = Verdict::HyperbolicExcluded;
        v.certificates.push_back(std::move(c));
        return v;
      }
      consider_best(c);
      continue;
    }

    BoundCertificate rough = rough_bound_for(q.gram, d);
    attach_basis(rough, cfg, basis);
    if (rough.bound_on_2h < two_h) {
      v.status = Verdict::HyperbolicExcluded;
      v.certificates.push_back(std::move(rough));
      return v;
    }
    consider_best(rough);
    const Rational box_value = d_squared(d) * rough.gram_inverse.entry_sum();
    if (box_value < two_h) {
      if (auto box = box_certificate_for(q.gram, d)) {
        attach_basis(*box, cfg, basis);
        v.status = Verdict::HyperbolicExcluded;
        v.certificates.push_back(std::move(*box));
        return v;
      }
    } else if (!box_candidate || box_value < box_candidate->first) {
      box_candidate.emplace(box_value, sub);
    }
  }

  v.status = Verdict::HyperbolicUndecided;
  if (box_candidate && (!best || box_candidate->first < best->bound_on_2h)) {
    const CurveConfig induced = cfg.induced(box_candidate->second);
    const Quotient q = quotient_by_kernel(induced);
    if (auto box = box_certificate_for(q.gram, d)) {
      std::vector<std::size_t> basis;
      for (auto b : q.basis) basis.push_back(box_candidate->second[b]);
      attach_basis(*box, cfg, basis);
      consider_best(*box);
    }
  }
  if (best) {
    v.notes.push_back("best bound " + to_string(best->bound_on_2h) + " >= 2h = " +
                      to_string(two_h));
    v.certificates.push_back(std::move(*best));
  } else {
    v.notes.push_back("no hyperbolic subgraph within the cap");
  }
  return v;
}

HRange admissible_h_range(const CurveConfig& cfg, int d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (cfg.max_degree() > d) throw std::invalid_argument("a vertex degree exceeds d");
  const auto cls = classify(cfg);
  if (cls.kind == LatticeKind::Elliptic || cls.kind == LatticeKind::Parabolic)
    return {std::nullopt, "independent of h"};
  if (cls.kind == LatticeKind::Invalid) return {Integer(0), "signature has two positive directions"};
  const auto ip = intrinsic_polarization(cfg);
  if (!ip.exists)
    return {Integer(0),
            "intrinsic polarization does not exist: the degree vector pairs nontrivially with "
            "ker(M), so L cannot embed into L_H"};
  Integer m = floor_of(ip.square / 2);
  if (m < 0) m = 0;
  return {m, "h <= floor(H_Gamma^2 / 2)"};
}

}  // namespace k3lat
