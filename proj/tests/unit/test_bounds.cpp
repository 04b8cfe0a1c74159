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

#include <random>

#include "configs.hpp"
#include "doctest.h"
#include "k3lat/bounds.hpp"
#include "k3lat/errors.hpp"
#include "oracles.hpp"

using namespace k3lat;

namespace {

oracle::Mat to_oracle(const SymMatrix& m) {
  oracle::Mat a(m.size(), std::vector<oracle::Q>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) a[i][j] = m(i, j);
  return a;
}

// Random connected hyperbolic configuration on n vertices, or nullopt.
std::optional<CurveConfig> random_hyperbolic(std::mt19937& rng, std::size_t n) {
  std::vector<CurveVertex> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back({"v" + std::to_string(i), rng() % 4 == 0 ? 0 : -2, 1});
  CurveConfig cfg(vs);
  for (std::size_t i = 1; i < n; ++i) cfg.set_edge(i, rng() % i, 1 + static_cast<int>(rng() % 3));
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = rng() % n, j = rng() % n;
    if (i != j) cfg.set_edge(i, j, 1 + static_cast<int>(rng() % 2));
  }
  if (classify(cfg).kind != LatticeKind::Hyperbolic) return std::nullopt;
  return cfg;
}

}  // namespace

TEST_CASE("intrinsic polarization examples") {
  const auto ip = intrinsic_polarization(fixtures::isotropic_with_root());
  REQUIRE(ip.exists);
  CHECK(ip.coords == RationalVector{Rational(13), Rational(6)});
  CHECK(ip.square == 84);

  CurveConfig two_iso({{"x", 0, 1}, {"y", 0, 1}});
  CHECK_FALSE(intrinsic_polarization(two_iso).exists);

  const auto a2 = intrinsic_polarization(fixtures::path(2));
  REQUIRE(a2.exists);
  CHECK(a2.coords == RationalVector{Rational(-1), Rational(-1)});
  CHECK(a2.square == -2);
}

TEST_CASE("rough bound examples") {
  const auto d6 = rough_bound(fixtures::d6tilde_example(), 1);
  CHECK(d6.bound_on_2h == Rational(1640, 21));
  CHECK(verify_certificate(d6).empty());

  CHECK(rough_bound(fixtures::isotropic_with_root(), 1).bound_on_2h == 4);

  const auto c3 = rough_bound(fixtures::char3_example(), 1);
  CHECK(c3.bound_on_2h >= 86);
  CHECK(c3.gram_inverse.entry_sum() == 86);

  CHECK_THROWS_AS(rough_bound(fixtures::path(2), 1), std::domain_error);
  // degenerate hyperbolic lattice: I4 support next to a hyperbolic pair
  const auto deg = fixtures::cycle(4).disjoint_union(fixtures::graph({"p", "q"}, {{"p", "q"}}, 3));
  REQUIRE(signature(gram(deg)) == Signature{1, 4, 1});
  CHECK_THROWS_AS(rough_bound(deg, 1), DegenerateLattice);
}

TEST_CASE("box certificate examples") {
  const auto c3 = box_certificate(fixtures::char3_example(), 1);
  CHECK(c3.bound_on_2h == 86);
  CHECK(verify_certificate(c3).empty());

  const auto c2 = box_certificate(fixtures::char2_example(), 1);
  CHECK(c2.bound_on_2h == Rational(185, 2));
  CHECK(verify_certificate(c2).empty());
  CHECK(box_certificate(fixtures::char2_example(), 2).bound_on_2h == 370);

  // G^-1 = [[2,1],[1,0]] is entrywise nonnegative
  const auto toy = box_certificate(fixtures::isotropic_with_root(), 3);
  CHECK(toy.g0 == SymMatrix(2));
  CHECK(toy.bound_on_2h == 9 * toy.gram_inverse.entry_sum());
}

TEST_CASE("tampered certificates are rejected") {
  auto c = box_certificate(fixtures::char3_example(), 1);
  auto bad = c;
  bad.bound_on_2h -= 1;
  CHECK_FALSE(verify_certificate(bad).empty());
  bad = c;
  bad.g_plus.set(0, 0, bad.g_plus(0, 0) + 1);
  CHECK_FALSE(verify_certificate(bad).empty());
  bad = c;
  bad.g0 = SymMatrix(c.g0.size());
  bad.g_plus = c.gram_inverse;
  CHECK_FALSE(verify_certificate(bad).empty());  // G^-1 has negative entries

  auto r = rough_bound(fixtures::d6tilde_example(), 1);
  r.bound_on_2h = Rational(530, 7);
  CHECK_FALSE(verify_certificate(r).empty());
}

TEST_CASE("exclusion examples") {
  auto v = exclude(fixtures::d6tilde_example(), 1, 43);
  CHECK(v.status == Verdict::HyperbolicExcluded);
  REQUIRE_FALSE(v.certificates.empty());
  CHECK(v.certificates[0].bound_on_2h < 86);

  v = exclude(fixtures::char3_example(), 1, 43);
  CHECK(v.status == Verdict::HyperbolicUndecided);
  REQUIRE_FALSE(v.certificates.empty());
  CHECK(v.certificates[0].bound_on_2h == 86);

  v = exclude(fixtures::char3_example(), 1, 44);
  CHECK(v.status == Verdict::HyperbolicExcluded);

  CHECK(exclude(fixtures::char2_example(), 2, 185).status == Verdict::HyperbolicUndecided);
  CHECK(exclude(fixtures::char2_example(), 2, 186).status == Verdict::HyperbolicExcluded);

  CHECK(exclude(fixtures::path(3), 1, 43).status == Verdict::EllipticAdmissible);
  CHECK(exclude(fixtures::path(22), 1, 43).status == Verdict::EllipticExcluded);
  CHECK(exclude(fixtures::cycle(4), 1, 43).status == Verdict::ParabolicFibration);
  CHECK(exclude(CurveConfig({{"a", 2, 1}, {"b", 2, 1}}), 1, 43).status == Verdict::InvalidSignature);
  CHECK_THROWS_AS(exclude(CurveConfig({{"a", -2, 3}}), 2, 43), std::invalid_argument);
}

TEST_CASE("pinned degrees use the intrinsic square") {
  const auto v = exclude(fixtures::isotropic_with_root(), 6, 43, kDefaultSubgraphCap, DegreeMode::Pinned);
  CHECK(v.status == Verdict::HyperbolicExcluded);
  REQUIRE_FALSE(v.certificates.empty());
  CHECK(v.certificates[0].kind == CertificateKind::IntrinsicSquare);
  CHECK(v.certificates[0].bound_on_2h == 84);
  CHECK(verify_certificate(v.certificates[0]).empty());
  CHECK(exclude(fixtures::isotropic_with_root(), 6, 42, kDefaultSubgraphCap, DegreeMode::Pinned).status ==
        Verdict::HyperbolicUndecided);
}

TEST_CASE("admissible h range") {
  CHECK(*admissible_h_range(fixtures::isotropic_with_root(), 6).max_h == 42);
  CHECK_FALSE(admissible_h_range(fixtures::cycle(4), 1).max_h.has_value());
  // hyperbolic, but the degree vector pairs with the kernel
  CurveConfig cfg({{"x", 0, 1}, {"y", 0, 1}, {"a", -2, 1}, {"b", -2, 1}});
  cfg.set_edge("a", "b", 3);
  REQUIRE(classify(cfg).kind == LatticeKind::Hyperbolic);
  REQUIRE_FALSE(intrinsic_polarization(cfg).exists);
  CHECK(*admissible_h_range(cfg, 1).max_h == 0);
}

TEST_CASE("property: certificates are sound and dominate the exhaustive box maximum") {
  std::mt19937 rng(31);
  int checked = 0;
  for (int t = 0; t < 400 && checked < 120; ++t) {
    const auto cfg = random_hyperbolic(rng, 2 + rng() % 4);
    if (!cfg || signature(gram(*cfg)).n_zero != 0) continue;
    ++checked;
    for (int d = 1; d <= 3; ++d) {
      const auto rough = rough_bound(*cfg, d);
      CHECK(verify_certificate(rough).empty());
      const auto brute = oracle::box_maximum(to_oracle(inverse(gram(*cfg))), d);
      CHECK(brute <= rough.bound_on_2h);
      if (const auto box = box_certificate_for(gram(*cfg), d)) {
        CHECK(verify_certificate(*box).empty());
        CHECK(brute <= box->bound_on_2h);
        CHECK(box->bound_on_2h <= rough.bound_on_2h);
        // the box optimum is attained at (d, ..., d)
        CHECK(brute == box->bound_on_2h);
      }
    }
  }
  CHECK(checked >= 50);
}

TEST_CASE("property: exclusion is monotone in h") {
  std::mt19937 rng(37);
  std::vector<CurveConfig> cfgs{fixtures::d6tilde_example(), fixtures::char3_example()};
  for (int t = 0; t < 200 && cfgs.size() < 12; ++t)
    if (auto c = random_hyperbolic(rng, 3 + rng() % 4)) cfgs.push_back(*c);
  for (const auto& cfg : cfgs) {
    bool excluded = false;
    for (int h = 1; h <= 60; ++h) {
      const bool now = exclude(cfg, 1, h).status == Verdict::HyperbolicExcluded;
      if (excluded) CHECK(now);
      excluded = excluded || now;
    }
  }
}

TEST_CASE("D6~ bound does not depend on which three simple components carry curves") {
  const std::vector<std::string> simple{"e1", "e2", "e3", "e4"};
  for (std::size_t skip = 0; skip < simple.size(); ++skip) {
    std::vector<std::pair<std::string, std::string>> edges{{"c1", "c2"}, {"c2", "c3"}, {"c1", "e1"},
                                                           {"c1", "e2"}, {"c3", "e3"}, {"c3", "e4"}};
    std::vector<std::string> ids{"c1", "c2", "c3", "e1", "e2", "e3", "e4"};
    for (std::size_t i = 0; i < simple.size(); ++i) {
      if (i == skip) continue;
      ids.push_back("f" + simple[i]);
      edges.emplace_back(simple[i], "f" + simple[i]);
    }
    const auto cfg = fixtures::graph(ids, edges);
    CAPTURE(skip);
    CHECK(rough_bound(cfg, 1).bound_on_2h == Rational(1640, 21));
    CHECK(exclude(cfg, 1, 43).status == Verdict::HyperbolicExcluded);
  }
}
