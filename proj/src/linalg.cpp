#include "morita/linalg.hpp"

#include <algorithm>

#include "morita/parallel.hpp"

namespace morita {

namespace {

constexpr std::size_t kParallelCutoff = 64 * 64;

template <bool Parallel>
RrefResult rref_impl(const Matrix& m) {
  RrefResult out{m, {}};
  Matrix& r = out.r;
  const std::size_t nr = r.rows(), nc = r.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < nc && lead < nr; ++c) {
    std::size_t piv = lead;
    while (piv < nr && r.at(piv, c).is_zero()) ++piv;
    if (piv == nr) continue;
    if (piv != lead) {
      for (std::size_t j = 0; j < nc; ++j) std::swap(r.at(piv, j), r.at(lead, j));
    }
    const Scalar inv = r.at(lead, c).inv();
    for (std::size_t j = c; j < nc; ++j) r.at(lead, j) = r.at(lead, j) * inv;
    auto eliminate = [&](std::size_t i) {
      if (i == lead || r.at(i, c).is_zero()) return;
      const Scalar f = r.at(i, c);
      for (std::size_t j = c; j < nc; ++j) {
        r.at(i, j) = r.at(i, j) - f * r.at(lead, j);
      }
    };
    if constexpr (Parallel) {
      parallel_for(nr, eliminate);
    } else {
      serial_for(nr, eliminate);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  return out;
}

}  // namespace

RrefResult rref_serial(const Matrix& m) { return rref_impl<false>(m); }
RrefResult rref_parallel(const Matrix& m) { return rref_impl<true>(m); }

RrefResult rref(const Matrix& m) {
  if (m.rows() * m.cols() >= kParallelCutoff) return rref_parallel(m);
  return rref_serial(m);
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix kernel_basis(const Matrix& m) {
  const RrefResult rr = rref(m);
  const std::size_t nc = m.cols();
  std::vector<std::size_t> free_cols;
  {
    std::size_t k = 0;
    for (std::size_t c = 0; c < nc; ++c) {
      if (k < rr.pivots.size() && rr.pivots[k] == c) {
        ++k;
      } else {
        free_cols.push_back(c);
      }
    }
  }
  Matrix basis(m.field(), nc, free_cols.size());
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    const std::size_t fc = free_cols[b];
    basis.at(fc, b) = Scalar::one(m.field());
    for (std::size_t t = 0; t < rr.pivots.size(); ++t) {
      basis.at(rr.pivots[t], b) = -rr.r.at(t, fc);
    }
  }
  return basis;
}

std::optional<Matrix> solve_all_columns(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeMismatchError("solve");
  const RrefResult rr = rref(hstack(a, b));
  // any pivot landing in the b block marks an inconsistent column
  for (std::size_t c : rr.pivots) {
    if (c >= a.cols()) return std::nullopt;
  }
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t t = 0; t < rr.pivots.size(); ++t) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      x.at(rr.pivots[t], j) = rr.r.at(t, a.cols() + j);
    }
  }
  return x;
}

SolveResult solve_linear(const Matrix& a, const Matrix& b) {
  if (b.cols() != 1) throw ShapeMismatchError("solve expects a column");
  SolveResult res;
  res.solution_dim = a.cols() - rank(a);
  auto x = solve_all_columns(a, b);
  if (!x) return res;
  res.has_solution = true;
  res.x = *x;
  return res;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  const RrefResult rr = rref(hstack(m, Matrix::identity(m.field(), n)));
  if (rr.rank() != n || (n > 0 && rr.pivots.back() >= n)) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.r.at(i, n + j);
  return inv;
}

Matrix column_space_basis(const Matrix& m) {
  const RrefResult rr = rref(m.transpose());
  Matrix basis(m.field(), m.rows(), rr.rank());
  for (std::size_t t = 0; t < rr.rank(); ++t)
    for (std::size_t i = 0; i < m.rows(); ++i) basis.at(i, t) = rr.r.at(t, i);
  return basis;
}

QuotientSpace quotient_space(const Matrix& relations) {
  const Field f = relations.field();
  const std::size_t n = relations.cols();
  const RrefResult rr = rref(relations);
  std::vector<std::size_t> free_cols;
  {
    std::size_t k = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (k < rr.pivots.size() && rr.pivots[k] == c) {
        ++k;
      } else {
        free_cols.push_back(c);
      }
    }
  }
  QuotientSpace q;
  q.ambient_dim = n;
  q.quotient_dim = free_cols.size();
  q.projection = Matrix(f, q.quotient_dim, n);
  q.section = Matrix(f, n, q.quotient_dim);
  for (std::size_t a = 0; a < free_cols.size(); ++a) {
    q.projection.at(a, free_cols[a]) = Scalar::one(f);
    for (std::size_t t = 0; t < rr.pivots.size(); ++t) {
      q.projection.at(a, rr.pivots[t]) = -rr.r.at(t, free_cols[a]);
    }
    q.section.at(free_cols[a], a) = Scalar::one(f);
  }
  return q;
}

QuotientSpace trivial_quotient(const Field& f, std::size_t dim) {
  QuotientSpace q;
  q.ambient_dim = q.quotient_dim = dim;
  q.projection = Matrix::identity(f, dim);
  q.section = Matrix::identity(f, dim);
  return q;
}

}  // namespace morita
