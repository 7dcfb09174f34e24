#pragma once

#include <random>

#include "morita/matrix.hpp"

namespace morita::testutil {

inline Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols,
                            std::mt19937_64& g, long long lo = -9, long long hi = 9) {
  std::uniform_int_distribution<long long> d(lo, hi);
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar::from_int(f, d(g));
  return m;
}

// Laplace-expansion determinant, deliberately naive: the independent oracle
// for rank computations.
inline Scalar det_by_expansion(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m.at(0, 0);
  Scalar acc = Scalar::zero(m.field());
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    Matrix minor(m.field(), n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    Scalar term = m.at(0, j) * det_by_expansion(minor);
    if (j % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Rank as the size of the largest nonvanishing minor.
inline std::size_t rank_by_minors(const Matrix& m) {
  const std::size_t maxk = std::min(m.rows(), m.cols());
  std::size_t best = 0;
  for (std::size_t k = 1; k <= maxk; ++k) {
    bool found = false;
    for (const auto& rsel : subsets(m.rows(), k)) {
      for (const auto& csel : subsets(m.cols(), k)) {
        Matrix sub(m.field(), k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(rsel[i], csel[j]);
        if (!det_by_expansion(sub).is_zero()) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;
    best = k;
  }
  return best;
}

}  // namespace morita::testutil
