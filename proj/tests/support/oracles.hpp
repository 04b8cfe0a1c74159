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

// Independent oracles for the test suite. Nothing here calls the library's
// linear algebra.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;
using Poly = std::vector<Q>;  // low degree first
using Mat = std::vector<std::vector<Q>>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

inline Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Returns {quotient, remainder}.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q;
  if (degree(a) < degree(b)) return {q, a};
  q.assign(a.size() - b.size() + 1, 0);
  while (!a.empty() && degree(a) >= degree(b)) {
    const int shift = degree(a) - degree(b);
    const Q c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Q lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

inline int sign_at(const Poly& p, const Q& x) {
  Q v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return sgn(v);
}

// Sign at +inf (dir = 1) or -inf (dir = -1).
inline int sign_at_infinity(const Poly& p, int dir) {
  if (p.empty()) return 0;
  int s = sgn(p.back());
  if (dir < 0 && degree(p) % 2 == 1) s = -s;
  return s;
}

inline std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p, derivative(p)};
  while (!chain.back().empty()) {
    Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  if (chain.back().empty()) chain.pop_back();
  return chain;
}

inline int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Distinct real roots of a square-free p with p(0) != 0: {negative, positive}.
inline std::pair<int, int> distinct_root_signs(const Poly& p) {
  if (degree(p) < 1) return {0, 0};
  const auto chain = sturm_chain(p);
  std::vector<int> neg, zero, pos;
  for (const auto& q : chain) {
    neg.push_back(sign_at_infinity(q, -1));
    zero.push_back(sign_at(q, 0));
    pos.push_back(sign_at_infinity(q, 1));
  }
  return {variations(neg) - variations(zero), variations(zero) - variations(pos)};
}

struct RootSigns {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

// Root signs with multiplicity: peel x^k, then split into square-free layers
// (Yun's decomposition) and count each layer with Sturm sequences.
inline RootSigns root_signs(Poly p) {
  trim(p);
  RootSigns r;
  std::size_t k = 0;
  while (k < p.size() && p[k] == 0) ++k;
  r.zero = static_cast<int>(k);
  p.erase(p.begin(), p.begin() + static_cast<long>(k));
  // Yun: f = prod a_i^i with a_i square-free and coprime.
  Poly a = gcd(p, derivative(p));
  if (a.empty()) return r;
  Poly b = divmod(p, a).first;
  Poly c = divmod(derivative(p), a).first;
  Poly d = sub(c, derivative(b));
  for (int i = 1; degree(b) >= 1; ++i) {
    Poly ai = gcd(b, d);
    b = divmod(b, ai).first;
    c = divmod(d, ai).first;
    d = sub(c, derivative(b));
    const auto [neg, pos] = distinct_root_signs(ai);
    r.negative += i * neg;
    r.positive += i * pos;
  }
  return r;
}

// det(x I - M) by Faddeev-LeVerrier.
inline Poly characteristic_polynomial(const Mat& m) {
  const std::size_t n = m.size();
  Poly coeffs(n + 1, 0);
  coeffs[n] = 1;
  Mat mk(n, std::vector<Q>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    // mk = M * (mk_prev + c_{n-k+1} I)
    Mat prev = mk;
    for (std::size_t i = 0; i < n; ++i) prev[i][i] += coeffs[n - k + 1];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Q s = 0;
        for (std::size_t l = 0; l < n; ++l) s += m[i][l] * prev[l][j];
        mk[i][j] = s;
      }
    Q tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += mk[i][i];
    coeffs[n - k] = -tr / static_cast<long>(k);
  }
  return coeffs;
}

// Rank by fraction-free Bareiss elimination over the integers.
inline std::size_t bareiss_rank(std::vector<std::vector<Z>> a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  Z prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Z v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = v;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

// max of x^T A x over integer points of [0, d]^n, exhaustively.
inline Q box_maximum(const Mat& a, int d) {
  const std::size_t n = a.size();
  std::vector<int> x(n, 0);
  Q best;
  bool first = true;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      Q v = 0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) v += a[r][c] * (x[r] * x[c]);
      if (first || v > best) best = v;
      first = false;
      return;
    }
    for (int t = 0; t <= d; ++t) {
      x[i] = t;
      rec(i + 1);
    }
  };
  rec(0);
  return best;
}

inline std::vector<std::vector<long>> random_symmetric(std::mt19937& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m[i][j] = m[j][i] = dist(rng);
  return m;
}

}  // namespace oracle
