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
#include <initializer_list>
#include <vector>

#include "k3lat/rational.hpp"

namespace k3lat {

/// Dense row-major rational matrix, used for projections and transforms.
using RationalMatrix = std::vector<RationalVector>;

/// Symmetric n x n matrix with exact rational entries.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n);
  /// Throws std::invalid_argument if `rows` is not square and symmetric.
  explicit SymMatrix(const RationalMatrix& rows);
  SymMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static SymMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  /// Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, const Rational& v);

  bool is_integral() const;
  Rational entry_sum() const;
  /// Sum of max(0, a_ij) over all i, j.
  Rational positive_entry_sum() const;
  SymMatrix principal_submatrix(const std::vector<std::size_t>& idx) const;
  RationalMatrix rows() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
SymMatrix operator*(const Rational& s, const SymMatrix& a);

RationalVector multiply(const SymMatrix& m, const RationalVector& x);
RationalMatrix multiply(const SymMatrix& a, const SymMatrix& b);
/// x^T m y.
Rational bilinear(const SymMatrix& m, const RationalVector& x, const RationalVector& y);
Rational quadratic(const SymMatrix& m, const RationalVector& x);
Rational dot(const RationalVector& x, const RationalVector& y);
RationalVector to_rational(const IntegerVector& v);

/// Inertia of a real symmetric form.
struct Signature {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  std::size_t size() const noexcept { return n_plus + n_minus + n_zero; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Congruence diagonalization T m T^T = diag(d). Rows of T are the new basis.
struct Diagonalization {
  RationalVector diagonal;
  RationalMatrix transform;
};

Diagonalization diagonalize(const SymMatrix& m);
Signature signature(const SymMatrix& m);
std::size_t rank(const SymMatrix& m);

/// Primitive integer basis of {x : m x = 0}, first nonzero entry positive,
/// sorted lexicographically. Empty iff m is nondegenerate.
std::vector<IntegerVector> kernel_basis(const SymMatrix& m);

/// Throws SingularMatrix when m has a kernel.
SymMatrix inverse(const SymMatrix& m);

/// Solves m x = b for nondegenerate m. Throws SingularMatrix otherwise.
RationalVector solve(const SymMatrix& m, const RationalVector& b);

/// Pivot column indices of the reduced row echelon form of m.
std::vector<std::size_t> pivot_columns(const SymMatrix& m);

}  // namespace k3lat
