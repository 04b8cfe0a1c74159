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

#include "k3lat/root_systems.hpp"

#include <algorithm>
#include <stdexcept>

#include "k3lat/errors.hpp"

namespace k3lat {

bool RootComponent::is_affine() const noexcept {
  return kind == RootKind::AffineA || kind == RootKind::AffineD || kind == RootKind::AffineE ||
         kind == RootKind::A1Tilde;
}

bool RootComponent::is_definite() const noexcept {
  return kind == RootKind::A || kind == RootKind::D || kind == RootKind::E;
}

int RootComponent::lattice_rank() const noexcept {
  return kind == RootKind::IsotropicVertex ? 0 : rank;
}

const char* to_string(RootKind k) {
  switch (k) {
    case RootKind::A: return "A";
    case RootKind::D: return "D";
    case RootKind::E: return "E";
    case RootKind::AffineA: return "AffineA";
    case RootKind::AffineD: return "AffineD";
    case RootKind::AffineE: return "AffineE";
    case RootKind::IsotropicVertex: return "IsotropicVertex";
    case RootKind::A1Tilde: return "A1Tilde";
  }
  return "?";
}

std::string RootComponent::name() const {
  if (kind == RootKind::IsotropicVertex || kind == RootKind::A1Tilde) return to_string(kind);
  return std::string(to_string(kind)) + std::to_string(rank);
}

namespace {

// Vertices along the arm leaving `center` through `first`, stopping at a leaf
// or just before a vertex of degree >= 3.
std::vector<std::size_t> walk_arm(const CurveConfig& g, std::size_t center, std::size_t first) {
  std::vector<std::size_t> arm;
  std::size_t prev = center, cur = first;
  while (true) {
    const auto nb = g.neighbors(cur);
    if (nb.size() >= 3) break;
    arm.push_back(cur);
    if (nb.size() == 1) break;
    const std::size_t next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return arm;
}

// Multiplicities along an arm of an affine E diagram, from the centre out.
std::vector<long> affine_e_arm(int type, std::size_t length) {
  if (type == 6) return {2, 1};
  if (type == 7) return length == 1 ? std::vector<long>{2} : std::vector<long>{3, 2, 1};
  if (length == 1) return {3};
  if (length == 2) return {4, 2};
  return {5, 4, 3, 2, 1};
}

long affine_e_center(int type) { return type == 6 ? 3 : type == 7 ? 4 : 6; }

std::optional<Recognition> recognize_tree(const CurveConfig& g) {
  const std::size_t k = g.size();
  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < k; ++v) {
    const auto deg = g.neighbors(v).size();
    if (deg >= 3) branch.push_back(v);
    if (deg > 4) return std::nullopt;
  }
  if (branch.empty()) return Recognition{RootKind::A, static_cast<int>(k), std::nullopt};

  if (branch.size() == 1) {
    const std::size_t c = branch[0];
    const auto nb = g.neighbors(c);
    if (nb.size() == 4) {
      if (k != 5) return std::nullopt;
      IntegerVector ker(k, 1);
      ker[c] = 2;
      return Recognition{RootKind::AffineD, 4, ker};
    }
    std::vector<std::vector<std::size_t>> arms;
    for (auto n : nb) arms.push_back(walk_arm(g, c, n));
    std::sort(arms.begin(), arms.end(),
              [](const auto& x, const auto& y) { return x.size() < y.size(); });
    const std::size_t p = arms[0].size(), q = arms[1].size(), r = arms[2].size();
    if (p == 1 && q == 1) return Recognition{RootKind::D, static_cast<int>(r + 3), std::nullopt};
    if (p == 1 && q == 2 && r >= 2 && r <= 4)
      return Recognition{RootKind::E, static_cast<int>(r + 4), std::nullopt};
    int affine = 0;
    if (p == 2 && q == 2 && r == 2) affine = 6;
    if (p == 1 && q == 3 && r == 3) affine = 7;
    if (p == 1 && q == 2 && r == 5) affine = 8;
    if (affine == 0) return std::nullopt;
    IntegerVector ker(k, 0);
    ker[c] = affine_e_center(affine);
    for (const auto& arm : arms) {
      const auto mult = affine_e_arm(affine, arm.size());
      for (std::size_t i = 0; i < arm.size(); ++i) ker[arm[i]] = mult[i];
    }
    return Recognition{RootKind::AffineE, affine, ker};
  }

  if (branch.size() == 2) {
    // AffineD(n), n >= 5: both branch vertices carry two leaves.
    IntegerVector ker(k, 2);
    for (auto b : branch) {
      if (g.neighbors(b).size() != 3) return std::nullopt;
      int leaves = 0;
      for (auto n : g.neighbors(b))
        if (g.neighbors(n).size() == 1) {
          ++leaves;
          ker[n] = 1;
        }
      if (leaves != 2) return std::nullopt;
    }
    return Recognition{RootKind::AffineD, static_cast<int>(k - 1), ker};
  }
  return std::nullopt;
}

}  // namespace

std::optional<Recognition> recognize_shape(const CurveConfig& g) {
  const std::size_t k = g.size();
  if (k == 0) return std::nullopt;
  if (k == 1) {
    if (g.vertex(0).square == 0) return Recognition{RootKind::IsotropicVertex, 0, IntegerVector{1}};
    if (g.vertex(0).square == -2) return Recognition{RootKind::A, 1, std::nullopt};
    return std::nullopt;
  }
  for (const auto& v : g.vertices())
    if (v.square != -2) return std::nullopt;
  if (g.connected_components().size() != 1) return std::nullopt;
  for (const auto& [e, m] : g.edges()) {
    if (m == 1) continue;
    if (m == 2 && k == 2) return Recognition{RootKind::A1Tilde, 1, IntegerVector{1, 1}};
    return std::nullopt;
  }
  const std::size_t edges = g.edges().size();
  if (edges == k) {
    for (std::size_t v = 0; v < k; ++v)
      if (g.neighbors(v).size() != 2) return std::nullopt;
    return Recognition{RootKind::AffineA, static_cast<int>(k - 1), IntegerVector(k, 1)};
  }
  if (edges == k - 1) return recognize_tree(g);
  return std::nullopt;
}

Decomposition decompose(const CurveConfig& cfg) {
  const auto cls = classify(cfg);
  if (cls.kind == LatticeKind::Hyperbolic || cls.kind == LatticeKind::Invalid)
    throw NotNegativeSemidefinite(std::string("configuration is ") + to_string(cls.kind) +
                                  ", not negative semi-definite");
  Decomposition dec;
  for (const auto& comp : cfg.connected_components()) {
    const CurveConfig sub = cfg.induced(comp);
    const auto rec = recognize_shape(sub);
    bool ok = rec.has_value();
    if (ok) {
      // Certify the combinatorial match by the exact signature.
      const Signature sig = signature(gram(sub));
      const bool definite = rec->kind == RootKind::A || rec->kind == RootKind::D ||
                            rec->kind == RootKind::E;
      if (definite)
        ok = sig == Signature{0, sub.size(), 0};
      else if (rec->kind == RootKind::IsotropicVertex)
        ok = sig == Signature{0, 0, 1};
      else
        ok = sig == Signature{0, sub.size() - 1, 1} &&
             multiply(gram(sub), to_rational(*rec->kernel)) == RationalVector(sub.size());
    }
    if (!ok) {
      dec.unrecognized.push_back(comp);
      continue;
    }
    RootComponent rc;
    rc.kind = rec->kind;
    rc.rank = rec->rank;
    rc.vertices = comp;
    for (auto v : comp) rc.ids.push_back(cfg.vertex(v).id);
    rc.kernel = rec->kernel;
    dec.components.push_back(std::move(rc));
  }
  return dec;
}

bool max_rank_check(const Decomposition& dec, int rho_max) {
  long total = 0;
  for (const auto& c : dec.components) total += c.lattice_rank();
  for (const auto& u : dec.unrecognized) total += static_cast<long>(u.size());
  return total <= rho_max - 1;
}

namespace {

CurveVertex root(std::size_t i) { return {"r" + std::to_string(i), -2, 1}; }

void add_path(CurveConfig& g, std::size_t from, std::size_t count) {
  std::size_t prev = from;
  for (std::size_t i = 0; i < count; ++i) {
    const auto v = g.add_vertex(root(g.size()));
    g.set_edge(prev, v, 1);
    prev = v;
  }
}

}  // namespace

CurveConfig standard_diagram(RootKind kind, int n) {
  CurveConfig g;
  auto bad = [&] {
    return std::invalid_argument(std::string("no standard diagram ") + to_string(kind) +
                                 std::to_string(n));
  };
  switch (kind) {
    case RootKind::A: {
      if (n < 1) throw bad();
      g.add_vertex(root(0));
      add_path(g, 0, static_cast<std::size_t>(n - 1));
      break;
    }
    case RootKind::D: {
      if (n < 4) throw bad();
      for (int i = 0; i < 3; ++i) g.add_vertex(root(i));
      g.set_edge(0, 2, 1);
      g.set_edge(1, 2, 1);
      add_path(g, 2, static_cast<std::size_t>(n - 3));
      break;
    }
    case RootKind::E: {
      if (n < 6 || n > 8) throw bad();
      g.add_vertex(root(0));
      add_path(g, 0, 1);
      add_path(g, 0, 2);
      add_path(g, 0, static_cast<std::size_t>(n - 4));
      break;
    }
    case RootKind::AffineA: {
      if (n < 2) throw bad();
      g.add_vertex(root(0));
      add_path(g, 0, static_cast<std::size_t>(n));
      g.set_edge(0, static_cast<std::size_t>(n), 1);
      break;
    }
    case RootKind::AffineD: {
      if (n < 4) throw bad();
      const std::size_t chain = static_cast<std::size_t>(n - 3);
      for (std::size_t i = 0; i < chain + 4; ++i) g.add_vertex(root(i));
      g.set_edge(0, 2, 1);
      g.set_edge(1, 2, 1);
      for (std::size_t i = 2; i + 1 < 2 + chain; ++i) g.set_edge(i, i + 1, 1);
      g.set_edge(1 + chain, 2 + chain, 1);
      g.set_edge(1 + chain, 3 + chain, 1);
      break;
    }
    case RootKind::AffineE: {
      g.add_vertex(root(0));
      if (n == 6) {
        for (int i = 0; i < 3; ++i) add_path(g, 0, 2);
      } else if (n == 7) {
        add_path(g, 0, 1);
        add_path(g, 0, 3);
        add_path(g, 0, 3);
      } else if (n == 8) {
        add_path(g, 0, 1);
        add_path(g, 0, 2);
        add_path(g, 0, 5);
      } else {
        throw bad();
      }
      break;
    }
    case RootKind::A1Tilde:
      g.add_vertex(root(0));
      g.add_vertex(root(1));
      g.set_edge(0, 1, 2);
      break;
    case RootKind::IsotropicVertex:
      g.add_vertex({"r0", 0, 1});
      break;
  }
  return g;
}

IntegerVector standard_kernel(RootKind kind, int n) {
  auto from = [](std::initializer_list<long> xs) {
    IntegerVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
  };
  switch (kind) {
    case RootKind::AffineA:
      if (n < 2) break;
      return IntegerVector(static_cast<std::size_t>(n + 1), 1);
    case RootKind::AffineD: {
      if (n < 4) break;
      IntegerVector v(static_cast<std::size_t>(n + 1), 2);
      v.front() = v[1] = 1;
      v.back() = v[v.size() - 2] = 1;
      return v;
    }
    case RootKind::AffineE:
      if (n == 6) return from({3, 2, 1, 2, 1, 2, 1});
      if (n == 7) return from({4, 2, 3, 2, 1, 3, 2, 1});
      if (n == 8) return from({6, 3, 4, 2, 5, 4, 3, 2, 1});
      break;
    case RootKind::A1Tilde:
      return from({1, 1});
    case RootKind::IsotropicVertex:
      return from({1});
    default:
      break;
  }
  throw std::invalid_argument(std::string("no kernel vector for ") + to_string(kind) +
                              std::to_string(n));
}

}  // namespace k3lat
