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

#include <algorithm>
#include <random>
#include <set>

#include "configs.hpp"
#include "doctest.h"
#include "k3lat/kodaira.hpp"

using namespace k3lat;

namespace {

using Found = std::multiset<std::pair<std::string, std::set<std::string>>>;

Found summary(const std::vector<KodairaDivisor>& divs) {
  Found f;
  for (const auto& d : divs) f.emplace(d.type.name(), std::set<std::string>(d.ids.begin(), d.ids.end()));
  return f;
}

CurveConfig relabel(const CurveConfig& cfg, const std::string& prefix) {
  std::vector<CurveVertex> vs;
  for (auto v : cfg.vertices()) {
    v.id = prefix + v.id;
    vs.push_back(v);
  }
  CurveConfig out(vs);
  for (const auto& [e, m] : cfg.edges()) out.set_edge(e.first, e.second, m);
  return out;
}

}  // namespace

TEST_CASE("type table examples") {
  const auto i2s = type_table(KodairaTag::IStar, 2);
  CHECK(i2s.components == 7);
  CHECK(i2s.weight == 10);
  CHECK(i2s.euler() == 8);
  const auto i4 = type_table(KodairaTag::I, 4);
  CHECK(i4.components == 4);
  CHECK(i4.weight == 4);
  CHECK(i4.euler() == 4);
  const auto ii = type_table(KodairaTag::IIStar);
  CHECK(ii.components == 9);
  CHECK(ii.weight == 30);
  CHECK(ii.euler() == 10);
  CHECK(type_table(KodairaTag::IVStar).weight == 12);
  CHECK(type_table(KodairaTag::IIIStar).weight == 18);
}

TEST_CASE("property: Euler number exceeds component count by one exactly for additive types") {
  for (int n = 1; n <= 24; ++n) {
    const auto t = type_table(KodairaTag::I, n);
    CHECK(t.euler() - t.components == 0);
    CHECK(t.weight == n);
    const auto s = type_table(KodairaTag::IStar, n);
    CHECK(s.euler() - s.components == 1);
    CHECK(s.weight == 2 * n + 6);
  }
  for (auto tag : {KodairaTag::II, KodairaTag::III, KodairaTag::IV, KodairaTag::IVStar,
                   KodairaTag::IIIStar, KodairaTag::IIStar}) {
    const auto t = type_table(tag);
    CHECK(t.euler() - t.components == 1);
    CHECK(t.is_additive());
  }
  const auto amb = type_table(KodairaTag::I2OrIII);
  CHECK(amb.euler_min == 2);
  CHECK(amb.euler_max == 3);
}

TEST_CASE("property: multiplicities annihilate the standard affine Gram matrix") {
  auto check = [](RootKind kind, int n) {
    const auto cfg = standard_diagram(kind, n);
    const auto t = kodaira_type_of(kind, n);
    std::vector<int> m = t.multiplicities;
    RationalVector x;
    for (const auto& k : standard_kernel(kind, n)) x.emplace_back(k);
    CHECK(multiply(gram(cfg), x) == RationalVector(cfg.size()));
    std::vector<int> sorted_kernel;
    for (const auto& k : standard_kernel(kind, n)) sorted_kernel.push_back(static_cast<int>(k.get_si()));
    std::sort(sorted_kernel.begin(), sorted_kernel.end());
    std::sort(m.begin(), m.end());
    CHECK(sorted_kernel == m);
  };
  for (int n = 3; n <= 21; ++n) check(RootKind::AffineA, n);
  for (int n = 4; n <= 21; ++n) check(RootKind::AffineD, n);
  for (int n : {6, 7, 8}) check(RootKind::AffineE, n);
}

TEST_CASE("parsing type names") {
  CHECK(parse_kodaira_type("I4") == type_table(KodairaTag::I, 4));
  CHECK(parse_kodaira_type("I*2") == type_table(KodairaTag::IStar, 2));
  CHECK(parse_kodaira_type("I2*") == type_table(KodairaTag::IStar, 2));
  CHECK(parse_kodaira_type("IV*") == type_table(KodairaTag::IVStar));
  CHECK(parse_kodaira_type("III") == type_table(KodairaTag::III));
  CHECK(parse_kodaira_type("I3_OR_IV") == type_table(KodairaTag::I3OrIV));
  CHECK(parse_kodaira_type("I2_OR_III") == type_table(KodairaTag::I2OrIII));
  CHECK_THROWS_AS(parse_kodaira_type("V"), std::invalid_argument);
  CHECK_THROWS_AS(parse_kodaira_type("I*"), std::invalid_argument);
  for (int n = 0; n <= 24; ++n) {
    CHECK(parse_kodaira_type(type_table(KodairaTag::I, n).name()) == type_table(KodairaTag::I, n));
    CHECK(parse_kodaira_type(type_table(KodairaTag::IStar, n).name()) ==
          type_table(KodairaTag::IStar, n));
  }
}

TEST_CASE("divisor search examples") {
  auto divs = find_kodaira_divisors(fixtures::cycle(4));
  REQUIRE(divs.size() == 1);
  CHECK(divs[0].type.name() == "I4");
  CHECK(divs[0].multiplicities == std::vector<int>{1, 1, 1, 1});

  divs = find_kodaira_divisors(fixtures::star4());
  REQUIRE(divs.size() == 1);
  CHECK(divs[0].type.name() == "I*0");
  CHECK(divs[0].multiplicities == std::vector<int>{2, 1, 1, 1, 1});

  divs = find_kodaira_divisors(fixtures::pair(2));
  REQUIRE(divs.size() == 1);
  CHECK(divs[0].type.name() == "I2_OR_III");

  divs = find_kodaira_divisors(CurveConfig({{"f", 0, 3}}));
  REQUIRE(divs.size() == 1);
  CHECK(divs[0].nodal_or_cuspidal);
  CHECK(divisor_degree(divs[0], CurveConfig({{"f", 0, 3}})) == 3);
}

TEST_CASE("divisor degrees") {
  const auto cyc = fixtures::cycle(4);
  CHECK(divisor_degree(find_kodaira_divisors(cyc).at(0), cyc) == 4);
  const auto star = fixtures::star4();
  CHECK(divisor_degree(find_kodaira_divisors(star).at(0), star) == 6);

  // I*2 with simple components of degree 1 and double components of degree 2
  CurveConfig d6({{"l1", -2, 1}, {"l2", -2, 1}, {"c1", -2, 2}, {"c2", -2, 2}, {"c3", -2, 2},
                  {"l3", -2, 1}, {"l4", -2, 1}});
  for (auto [a, b] : std::vector<std::pair<std::string, std::string>>{
           {"l1", "c1"}, {"l2", "c1"}, {"c1", "c2"}, {"c2", "c3"}, {"c3", "l3"}, {"c3", "l4"}})
    d6.set_edge(a, b, 1);
  const auto divs = find_kodaira_divisors(d6);
  const auto it = std::find_if(divs.begin(), divs.end(),
                               [](const KodairaDivisor& d) { return d.type.name() == "I*2"; });
  REQUIRE(it != divs.end());
  long expected = 0;
  for (std::size_t i = 0; i < it->support.size(); ++i)
    expected += it->multiplicities[i] * d6.vertex(it->support[i]).degree;
  CHECK(expected == 4 * 1 + 3 * 2 * 2);
  CHECK(divisor_degree(*it, d6) == expected);
}

TEST_CASE("degree 6d exclusion") {
  const auto i2 = fixtures::pair(2).disjoint_union(relabel(fixtures::pair(3), "h"));
  const auto rep = exclusion_6d(i2, 1, 43);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].rule == rules::kKodaira6d);

  const auto i1s = standard_diagram(RootKind::AffineD, 5).disjoint_union(relabel(fixtures::pair(3), "h"));
  CHECK(exclusion_6d(i1s, 1, 43).violations.empty());

  const auto par = exclusion_6d(fixtures::cycle(4), 1, 43);
  CHECK(par.violations.empty());
  REQUIRE_FALSE(par.notes.empty());
  CHECK(par.notes[0].find("not hyperbolic") != std::string::npos);
}

TEST_CASE("a curve meeting a short fibre positively is reported") {
  // I2 support plus a curve meeting one component once
  auto cfg = fixtures::pair(2);
  cfg.add_vertex({"s", -2, 1});
  cfg.set_edge("x", "s", 1);
  REQUIRE(classify(cfg).kind == LatticeKind::Hyperbolic);
  const auto rep = exclusion_6d(cfg, 1, 43);
  int fibre = 0, orth = 0;
  for (const auto& v : rep.violations) {
    fibre += v.rule == rules::kKodaira6d;
    orth += v.rule == rules::kFibreOrthogonal;
  }
  CHECK(fibre == 1);
  CHECK(orth == 1);
}

TEST_CASE("property: divisor search is local on disjoint unions") {
  std::mt19937 rng(29);
  const std::vector<CurveConfig> pieces{
      fixtures::cycle(4), fixtures::star4(), fixtures::pair(2), fixtures::path(3),
      standard_diagram(RootKind::AffineE, 6), standard_diagram(RootKind::AffineD, 6),
      fixtures::cycle(3)};
  for (int t = 0; t < 40; ++t) {
    const auto a = relabel(pieces[rng() % pieces.size()], "a");
    const auto b = relabel(pieces[rng() % pieces.size()], "b");
    Found joint = summary(find_kodaira_divisors(a.disjoint_union(b)));
    Found parts = summary(find_kodaira_divisors(a));
    for (auto& x : summary(find_kodaira_divisors(b))) parts.insert(x);
    CHECK(joint == parts);
  }
}

TEST_CASE("weight cap filters the search") {
  const auto cfg = standard_diagram(RootKind::AffineE, 8);
  CHECK(find_kodaira_divisors(cfg, 29).empty());
  CHECK(find_kodaira_divisors(cfg, 30).size() == 1);
}
