#pragma once

// Exact Gaussian elimination over Q.

#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace mhecke {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;  // row-major

template <class T>
QVector to_qvector(const std::vector<T>& v) {
  QVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

// Reduces m in place to row echelon form and returns its rank.
inline int row_reduce(QMatrix& m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

inline int matrix_rank(QMatrix m) { return row_reduce(m); }

// Finds coefficients c with sum_j c_j * vectors[j] = target, if any.  The
// vectors must be linearly independent for the answer to be unique.
inline std::optional<QVector> solve_in_span(const std::vector<QVector>& vectors, const QVector& target) {
  std::size_t k = vectors.size(), n = target.size();
  QMatrix m(n, QVector(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = vectors[j][i];
    m[i][k] = target[i];
  }
  row_reduce(m);
  QVector c(k, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t piv = 0;
    while (piv <= k && m[i][piv] == 0) ++piv;
    if (piv == k) return std::nullopt;  // 0 = nonzero
    if (piv > k) continue;
    c[piv] = m[i][k] / m[i][piv];
  }
  return c;
}

}  // namespace mhecke
