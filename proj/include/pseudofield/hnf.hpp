#pragma once

#include <optional>
#include <vector>

#include "pseudofield/numeric.hpp"

namespace pseudofield {

/// Solves M x = c over the integers (M given as rows), returning some
/// integer solution or nullopt. Unimodular column reduction to a
/// triangular form, then forward substitution mapped back.
inline std::optional<std::vector<Int>> solve_integer_linear(std::vector<std::vector<Int>> m,
                                                            const std::vector<Int>& c) {
  std::size_t rows = m.size();
  std::size_t cols = rows == 0 ? 0 : m[0].size();
  if (c.size() != rows) throw std::invalid_argument("rhs size mismatch");
  // u tracks the column operations: columns of the reduced matrix are
  // original columns times u.
  std::vector<std::vector<Int>> u(cols, std::vector<Int>(cols, Int(0)));
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;
  auto col_combine = [&](std::size_t j, std::size_t k, const Int& q) {
    // col_j -= q * col_k
    for (std::size_t r = 0; r < rows; ++r) m[r][j] -= q * m[r][k];
    for (std::size_t r = 0; r < cols; ++r) u[r][j] -= q * u[r][k];
  };
  auto col_swap = [&](std::size_t j, std::size_t k) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][j], m[r][k]);
    for (std::size_t r = 0; r < cols; ++r) std::swap(u[r][j], u[r][k]);
  };
  std::vector<std::size_t> pivot_col(rows, cols);
  std::size_t piv = 0;
  for (std::size_t r = 0; r < rows && piv < cols; ++r) {
    // gcd-fold row r across columns piv..cols-1 into column piv.
    for (std::size_t j = piv + 1; j < cols; ++j) {
      while (m[r][j] != 0) {
        if (m[r][piv] == 0) {
          col_swap(piv, j);
          continue;
        }
        Int q = m[r][j] / m[r][piv];
        col_combine(j, piv, q);
        if (m[r][j] != 0) col_swap(piv, j);
      }
    }
    if (m[r][piv] != 0) {
      pivot_col[r] = piv;
      ++piv;
    }
  }
  // Forward substitution: rows with a pivot determine z; others must be
  // consistent with the already-fixed z entries.
  std::vector<Int> z(cols, Int(0));
  for (std::size_t r = 0; r < rows; ++r) {
    Int acc = c[r];
    for (std::size_t j = 0; j < cols; ++j) {
      if (j == pivot_col[r]) continue;
      acc -= m[r][j] * z[j];
    }
    if (pivot_col[r] == cols) {
      if (acc != 0) return std::nullopt;
      continue;
    }
    const Int& d = m[r][pivot_col[r]];
    if (acc % d != 0) return std::nullopt;
    z[pivot_col[r]] = acc / d;
  }
  std::vector<Int> x(cols, Int(0));
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < cols; ++j) x[i] += u[i][j] * z[j];
  }
  return x;
}

}  // namespace pseudofield
