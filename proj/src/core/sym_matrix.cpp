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

#include "k3lat/sym_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "k3lat/errors.hpp"

namespace k3lat {

SymMatrix::SymMatrix(std::size_t n) : n_(n), a_(n * n) {}

SymMatrix::SymMatrix(const RationalMatrix& rows) : SymMatrix(rows.size()) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) throw std::invalid_argument("matrix is not square");
    for (std::size_t j = 0; j < n_; ++j) a_[i * n_ + j] = rows[i][j];
  }
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (a_[i * n_ + j] != a_[j * n_ + i])
        throw std::invalid_argument("matrix is not symmetric");
}

SymMatrix::SymMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  RationalMatrix r;
  for (const auto& row : rows) {
    RationalVector v;
    for (long x : row) v.emplace_back(x);
    r.push_back(std::move(v));
  }
  *this = SymMatrix(r);
}

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
  return m;
}

void SymMatrix::set(std::size_t i, std::size_t j, const Rational& v) {
  a_[i * n_ + j] = v;
  a_[j * n_ + i] = v;
}

bool SymMatrix::is_integral() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

Rational SymMatrix::entry_sum() const {
  Rational s = 0;
  for (const auto& x : a_) s += x;
  return s;
}

Rational SymMatrix::positive_entry_sum() const {
  Rational s = 0;
  for (const auto& x : a_)
    if (sgn(x) > 0) s += x;
  return s;
}

SymMatrix SymMatrix::principal_submatrix(const std::vector<std::size_t>& idx) const {
  SymMatrix s(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s.a_[i * s.n_ + j] = (*this)(idx[i], idx[j]);
  return s;
}

RationalMatrix SymMatrix::rows() const {
  RationalMatrix r(n_, RationalVector(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r[i][j] = (*this)(i, j);
  return r;
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  SymMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j) c.set(i, j, a(i, j) + b(i, j));
  return c;
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) { return a + Rational(-1) * b; }

SymMatrix operator*(const Rational& s, const SymMatrix& a) {
  SymMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j) c.set(i, j, s * a(i, j));
  return c;
}

RationalVector multiply(const SymMatrix& m, const RationalVector& x) {
  if (x.size() != m.size()) throw std::invalid_argument("dimension mismatch");
  RationalVector y(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (sgn(m(i, j)) != 0) y[i] += m(i, j) * x[j];
  return y;
}

RationalMatrix multiply(const SymMatrix& a, const SymMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("dimension mismatch");
  RationalMatrix c(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a(i, k) * b(k, j);
    }
  return c;
}

Rational dot(const RationalVector& x, const RationalVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Rational bilinear(const SymMatrix& m, const RationalVector& x, const RationalVector& y) {
  return dot(x, multiply(m, y));
}

Rational quadratic(const SymMatrix& m, const RationalVector& x) { return bilinear(m, x, x); }

RationalVector to_rational(const IntegerVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& z : v) out.emplace_back(z);
  return out;
}

Diagonalization diagonalize(const SymMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m.rows();
  RationalMatrix t = SymMatrix::identity(n).rows();
  RationalVector diag(n);

  auto swap_index = [&](std::size_t p, std::size_t q) {
    if (p == q) return;
    std::swap(a[p], a[q]);
    for (auto& row : a) std::swap(row[p], row[q]);
    std::swap(t[p], t[q]);
  };

  std::size_t k = 0;
  for (; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a[p][p]) == 0) ++p;
    if (p == n) {
      // All remaining diagonal entries vanish: fold an off-diagonal pair
      // (i, j) into row i, giving a[i][i] = 2 a[i][j] != 0.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (sgn(a[i][j]) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      for (std::size_t l = 0; l < n; ++l) a[pi][l] += a[pj][l];
      for (std::size_t l = 0; l < n; ++l) a[l][pi] += a[l][pj];
      for (std::size_t l = 0; l < n; ++l) t[pi][l] += t[pj][l];
      p = pi;
    }
    swap_index(p, k);

    const Rational pivot = a[k][k];
    for (std::size_t j = k + 1; j < n; ++j) {
      if (sgn(a[j][k]) == 0) continue;
      const Rational f = a[j][k] / pivot;
      for (std::size_t l = k + 1; l < n; ++l) a[j][l] -= f * a[k][l];
      for (std::size_t l = 0; l < n; ++l) t[j][l] -= f * t[k][l];
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      a[j][k] = 0;
      a[k][j] = 0;
    }
    diag[k] = pivot;
  }
  return {std::move(diag), std::move(t)};
}

Signature signature(const SymMatrix& m) {
  Signature s;
  for (const auto& d : diagonalize(m).diagonal) {
    const int sg = sgn(d);
    if (sg > 0)
      ++s.n_plus;
    else if (sg < 0)
      ++s.n_minus;
    else
      ++s.n_zero;
  }
  return s;
}

namespace {

// Reduces `a` in place to reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && sgn(a[p][col]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < a[r].size(); ++c)
        if (sgn(a[row][c]) != 0) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> pivot_columns(const SymMatrix& m) {
  RationalMatrix a = m.rows();
  return rref(a, m.size());
}

std::size_t rank(const SymMatrix& m) { return pivot_columns(m).size(); }

std::vector<IntegerVector> kernel_basis(const SymMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m.rows();
  const auto pivots = rref(a, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<IntegerVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    IntegerVector z = primitive_integer_vector(v);
    auto lead = std::find_if(z.begin(), z.end(), [](const Integer& x) { return x != 0; });
    if (lead != z.end() && *lead < 0)
      for (auto& x : z) x = -x;
    basis.push_back(std::move(z));
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

SymMatrix inverse(const SymMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    a[i].resize(2 * n);
    a[i][n + i] = 1;
  }
  const auto pivots = rref(a, n);
  if (pivots.size() != n) throw SingularMatrix();
  RationalMatrix inv(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return SymMatrix(inv);
}

RationalVector solve(const SymMatrix& m, const RationalVector& b) {
  const std::size_t n = m.size();
  if (b.size() != n) throw std::invalid_argument("dimension mismatch");
  RationalMatrix a = m.rows();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  const auto pivots = rref(a, n);
  if (pivots.size() != n) throw SingularMatrix();
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

}  // namespace k3lat
