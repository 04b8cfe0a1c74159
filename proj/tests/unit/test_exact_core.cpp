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

#include "doctest.h"
#include "k3lat/errors.hpp"
#include "k3lat/sym_matrix.hpp"
#include "oracles.hpp"

using namespace k3lat;

namespace {

SymMatrix from_longs(const std::vector<std::vector<long>>& rows) {
  SymMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j) m.set(i, j, Rational(rows[i][j]));
  return m;
}

oracle::Mat to_oracle(const SymMatrix& m) {
  oracle::Mat a(m.size(), std::vector<oracle::Q>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) a[i][j] = m(i, j);
  return a;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("1640/21")) == "1640/21");
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-7")) == "-7");
  CHECK(to_string(parse_rational("4/2")) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(floor_of(Rational(185, 4)) == 46);
  CHECK(floor_of(Rational(-1, 2)) == -1);
}

TEST_CASE("primitive integer vectors") {
  const auto v = primitive_integer_vector({Rational(2, 3), Rational(-4, 3), Rational(0)});
  REQUIRE(v.size() == 3);
  CHECK(v[0] == 1);
  CHECK(v[1] == -2);
  CHECK(v[2] == 0);
}

TEST_CASE("signature examples") {
  CHECK(signature(SymMatrix{{-2, 1}, {1, -2}}) == Signature{0, 2, 0});
  CHECK(signature(SymMatrix{{0}}) == Signature{0, 0, 1});
  CHECK(signature(SymMatrix{{-2, 3}, {3, -2}}) == Signature{1, 1, 0});
  // all-zero diagonal forces the 2x2 pivot
  CHECK(signature(SymMatrix{{0, 1}, {1, 0}}) == Signature{1, 1, 0});
  CHECK(signature(SymMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}) == Signature{1, 2, 0});
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(SymMatrix{{0}}) == std::vector<IntegerVector>{{Integer(1)}});
  const SymMatrix cyc{{-2, 1, 0, 1}, {1, -2, 1, 0}, {0, 1, -2, 1}, {1, 0, 1, -2}};
  const auto k = kernel_basis(cyc);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == IntegerVector{1, 1, 1, 1});
  CHECK(kernel_basis(SymMatrix{{-2, 1}, {1, -2}}).empty());
}

TEST_CASE("inverse examples") {
  CHECK(inverse(SymMatrix{{0, 1}, {1, -2}}) == SymMatrix{{2, 1}, {1, 0}});
  CHECK(inverse(SymMatrix::identity(5)) == SymMatrix::identity(5));
  CHECK(inverse(SymMatrix{{-2, 1}, {1, -2}}) == Rational(1, 3) * SymMatrix{{-2, -1}, {-1, -2}});
  CHECK_THROWS_AS(inverse(SymMatrix{{1, 1}, {1, 1}}), SingularMatrix);
}

TEST_CASE("symmetric constructor rejects asymmetric input") {
  RationalMatrix rows{{Rational(1), Rational(2)}, {Rational(3), Rational(1)}};
  CHECK_THROWS_AS(SymMatrix{rows}, std::invalid_argument);
}

TEST_CASE("property: signature matches Sturm root-sign count") {
  std::mt19937 rng(20261017);
  int mismatches = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + t % 6;
    const SymMatrix m = from_longs(oracle::random_symmetric(rng, n, 4));
    const auto s = signature(m);
    const auto roots = oracle::root_signs(oracle::characteristic_polynomial(to_oracle(m)));
    if (static_cast<int>(s.n_plus) != roots.positive || static_cast<int>(s.n_minus) != roots.negative ||
        static_cast<int>(s.n_zero) != roots.zero)
      ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("property: nullity equals n minus Bareiss rank; kernel and inverse are exact") {
  std::mt19937 rng(7);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = 1 + t % 6;
    const auto raw = oracle::random_symmetric(rng, n, t % 3 == 0 ? 1 : 3);
    const SymMatrix m = from_longs(raw);
    std::vector<std::vector<oracle::Z>> zm(n, std::vector<oracle::Z>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) zm[i][j] = raw[i][j];
    const std::size_t r = oracle::bareiss_rank(zm);
    CHECK(signature(m).n_zero == n - r);
    CHECK(rank(m) == r);
    const auto kernel = kernel_basis(m);
    CHECK(kernel.size() == n - r);
    for (const auto& k : kernel)
      CHECK(multiply(m, to_rational(k)) == RationalVector(n, Rational(0)));
    if (r == n) {
      const auto prod = multiply(m, inverse(m));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) CHECK(prod[i][j] == (i == j ? 1 : 0));
    }
  }
}

TEST_CASE("property: diagonalization is a congruence") {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 6;
    const SymMatrix m = from_longs(oracle::random_symmetric(rng, n, 4));
    const auto dz = diagonalize(m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK(bilinear(m, dz.transform[i], dz.transform[j]) == (i == j ? dz.diagonal[i] : Rational(0)));
  }
}

TEST_CASE("determinism") {
  const SymMatrix m{{0, 2, 1}, {2, 0, -1}, {1, -1, 0}};
  CHECK(diagonalize(m).diagonal == diagonalize(m).diagonal);
  CHECK(kernel_basis(m) == kernel_basis(m));
}
