// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "plucker/polynomial.hpp"

namespace plucker::detail {

// Determinant of a small square matrix of polynomials, Laplace expansion
// along the first column.  Matrices here never exceed (n+1) x (n+1) with
// small n, so no fraction-free elimination is needed.
inline polynomial poly_determinant(const std::vector<std::vector<polynomial>>& m) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  polynomial acc;
  for (size_t i = 0; i < n; ++i) {
    if (m[i][0].is_zero()) continue;
    std::vector<std::vector<polynomial>> sub;
    sub.reserve(n - 1);
    for (size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      sub.emplace_back(m[r].begin() + 1, m[r].end());
    }
    polynomial cof = m[i][0] * poly_determinant(sub);
    acc = (i % 2 == 0) ? acc + cof : acc - cof;
  }
  return acc;
}

// Rank of a scalar matrix over Q(i) by exact Gaussian elimination.
inline int scalar_rank(std::vector<std::vector<gaussian_rational>> m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pivot = row;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    const gaussian_rational inv = gaussian_rational(1) / m[row][col];
    for (size_t r = row + 1; r < rows; ++r) {
      if (m[r][col].is_zero()) continue;
      const gaussian_rational factor = m[r][col] * inv;
      for (size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace plucker::detail
