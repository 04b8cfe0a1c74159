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

#include "k3lat/exact_lp.hpp"

#include <stdexcept>

namespace k3lat {

std::optional<RationalVector> find_feasible_point(const RationalMatrix& a,
                                                  const RationalVector& b) {
  const std::size_t m = b.size();
  if (a.size() != m) throw std::invalid_argument("row count mismatch");
  const std::size_t k = m == 0 ? 0 : a[0].size();

  // Columns: [0, k) structural, [k, k + m) slacks, then one artificial per
  // row with negative right-hand side. Last column is the right-hand side.
  std::vector<std::size_t> art_row;
  for (std::size_t i = 0; i < m; ++i)
    if (sgn(b[i]) < 0) art_row.push_back(i);
  const std::size_t ncols = k + m + art_row.size();
  const std::size_t rhs = ncols;

  RationalMatrix t(m + 1, RationalVector(ncols + 1));
  std::vector<std::size_t> basis(m);
  std::size_t next_art = k + m;
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("ragged constraint matrix");
    const int flip = sgn(b[i]) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j)
      if (sgn(a[i][j]) != 0) t[i][j] = flip * a[i][j];
    t[i][k + i] = flip;
    t[i][rhs] = flip * b[i];
    if (flip < 0) {
      t[i][next_art] = 1;
      basis[i] = next_art++;
    } else {
      basis[i] = k + i;
    }
  }
  if (art_row.empty()) return RationalVector(k);

  // Phase-one cost row: minimise the sum of artificials, expressed in the
  // nonbasic variables.
  RationalVector& cost = t[m];
  for (auto i : art_row)
    for (std::size_t j = 0; j <= ncols; ++j)
      if (j < k + m || j == rhs) cost[j] -= t[i][j];

  while (true) {
    std::size_t enter = ncols;
    for (std::size_t j = 0; j < ncols; ++j)
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == ncols) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    if (leave == m) throw std::logic_error("phase-one objective is unbounded");

    RationalVector& prow = t[leave];
    const Rational inv = 1 / prow[enter];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= ncols; ++j)
      if (sgn(prow[j]) != 0) {
        prow[j] *= inv;
        nz.push_back(j);
      }
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave || sgn(t[r][enter]) == 0) continue;
      const Rational f = t[r][enter];
      for (auto j : nz) t[r][j] -= f * prow[j];
    }
    basis[leave] = enter;
  }

  if (sgn(cost[rhs]) != 0) return std::nullopt;
  RationalVector x(k);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < k) x[basis[i]] = t[i][rhs];
  return x;
}

}  // namespace k3lat
