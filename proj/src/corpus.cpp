#include "morita/corpus.hpp"

namespace morita {

Algebra ground_algebra(const Field& f) {
  Algebra a;
  a.field = f;
  a.dim = 1;
  a.lmul = {Matrix::identity(f, 1)};
  a.unit = Matrix::identity(f, 1);
  return a;
}

Algebra matrix_algebra(const Field& f, std::size_t n) {
  Algebra a;
  a.field = f;
  a.dim = n * n;
  a.unit = Matrix(f, n * n, 1);
  for (std::size_t i = 0; i < n; ++i) a.unit.at(i * n + i, 0) = Scalar::one(f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // E_ij E_kl = delta_jk E_il
      Matrix L(f, n * n, n * n);
      for (std::size_t l = 0; l < n; ++l) L.at(i * n + l, j * n + l) = Scalar::one(f);
      a.lmul.push_back(L);
    }
  return a;
}

Algebra group_algebra(const Field& f, std::size_t n) {
  Algebra a;
  a.field = f;
  a.dim = n;
  a.unit = Matrix(f, n, 1);
  a.unit.at(0, 0) = Scalar::one(f);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix L(f, n, n);
    for (std::size_t j = 0; j < n; ++j) L.at((i + j) % n, j) = Scalar::one(f);
    a.lmul.push_back(L);
  }
  return a;
}

Algebra truncated_poly(const Field& f, std::size_t n) {
  Algebra a;
  a.field = f;
  a.dim = n;
  a.unit = Matrix(f, n, 1);
  a.unit.at(0, 0) = Scalar::one(f);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix L(f, n, n);
    for (std::size_t j = 0; i + j < n; ++j) L.at(i + j, j) = Scalar::one(f);
    a.lmul.push_back(L);
  }
  return a;
}

Algebra product_algebra(const Algebra& a, const Algebra& b) {
  if (a.field != b.field) throw FieldMismatchError{};
  Algebra p;
  p.field = a.field;
  p.dim = a.dim + b.dim;
  p.unit = vstack(a.unit, b.unit);
  for (std::size_t i = 0; i < a.dim; ++i) {
    Matrix L(p.field, p.dim, p.dim);
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) L.at(k, j) = a.lmul[i].at(k, j);
    p.lmul.push_back(L);
  }
  for (std::size_t i = 0; i < b.dim; ++i) {
    Matrix L(p.field, p.dim, p.dim);
    for (std::size_t j = 0; j < b.dim; ++j)
      for (std::size_t k = 0; k < b.dim; ++k)
        L.at(a.dim + k, a.dim + j) = b.lmul[i].at(k, j);
    p.lmul.push_back(L);
  }
  return p;
}

Algebra basis_change(const Algebra& a, const Matrix& p) {
  const auto pinv = inverse(p);
  if (!pinv) throw GenerationError("basis change matrix not invertible");
  Algebra out;
  out.field = a.field;
  out.dim = a.dim;
  out.unit = *pinv * a.unit;
  for (std::size_t i = 0; i < a.dim; ++i) {
    // L'_i = P^-1 . L_{P e_i} . P
    out.lmul.push_back(*pinv * a.left_op(p.col(i)) * p);
  }
  return out;
}

Algebra random_algebra(const Field& f, std::uint64_t seed, std::size_t dim) {
  if (dim == 0) throw GenerationError("dimension must be positive");
  Rng rng(seed);
  // random composition of catalog blocks filling the dimension
  Algebra acc = ground_algebra(f);
  bool first = true;
  std::size_t left = dim;
  while (left > 0) {
    std::size_t block = 1 + rng.next(left);
    Algebra part;
    if (block == 1) {
      part = ground_algebra(f);
    } else {
      switch (rng.next(3)) {
        case 0: part = group_algebra(f, block); break;
        case 1: part = truncated_poly(f, block); break;
        default:
          // largest square fitting the block, padded with k factors
          std::size_t n = 1;
          while ((n + 1) * (n + 1) <= block) ++n;
          part = matrix_algebra(f, n);
          for (std::size_t i = n * n; i < block; ++i)
            part = product_algebra(part, ground_algebra(f));
          break;
      }
    }
    acc = first ? part : product_algebra(acc, part);
    first = false;
    left -= block;
  }
  for (int attempt = 0; attempt < 32; ++attempt) {
    const Matrix p = rng.matrix(f, dim, dim);
    if (!inverse(p)) continue;
    Algebra out = basis_change(acc, p);
    if (validate_algebra(out).ok()) return out;
  }
  throw GenerationError("no invertible basis change found");
}

Bimodule regular_bimodule(const Algebra& a, const Algebra& b) {
  if (a.field != b.field) throw FieldMismatchError{};
  Bimodule m;
  m.left = a;
  m.right = b;
  m.field = a.field;
  m.dim = a.dim * b.dim;
  const Matrix ia = Matrix::identity(a.field, a.dim);
  const Matrix ib = Matrix::identity(a.field, b.dim);
  for (std::size_t i = 0; i < a.dim; ++i) m.lact.push_back(kron(a.lmul[i], ib));
  for (std::size_t j = 0; j < b.dim; ++j) m.ract.push_back(kron(ia, b.rmul(j)));
  return m;
}

Bimodule column_module(const Field& f, std::size_t n) {
  Bimodule m;
  m.left = matrix_algebra(f, n);
  m.right = ground_algebra(f);
  m.field = f;
  m.dim = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix e(f, n, n);
      e.at(i, j) = Scalar::one(f);
      m.lact.push_back(e);
    }
  m.ract = {Matrix::identity(f, n)};
  return m;
}

Bimodule row_module(const Field& f, std::size_t n) {
  Bimodule m;
  m.left = ground_algebra(f);
  m.right = matrix_algebra(f, n);
  m.field = f;
  m.dim = n;
  m.lact = {Matrix::identity(f, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // row . E_ij picks coordinate i into slot j
      Matrix e(f, n, n);
      e.at(j, i) = Scalar::one(f);
      m.ract.push_back(e);
    }
  return m;
}

namespace {

// closure of the column span of `vectors` under all action operators
Matrix action_closure(const Bimodule& w, const Matrix& vectors) {
  Matrix basis = column_space_basis(vectors);
  while (true) {
    Matrix grown = basis;
    for (const auto& op : w.lact) grown = hstack(grown, op * basis);
    for (const auto& op : w.ract) grown = hstack(grown, op * basis);
    Matrix next = column_space_basis(grown);
    if (next.cols() == basis.cols()) return next;
    basis = next;
  }
}

// restrict op to the span of basis columns: solve basis . X = op . basis
Matrix restrict_to(const Matrix& basis, const Matrix& op) {
  const auto x = solve_all_columns(basis, op * basis);
  if (!x) throw GenerationError("span not action-invariant");
  return *x;
}

}  // namespace

Bimodule span_sub_bimodule(const Bimodule& w, const Matrix& vectors) {
  const Matrix basis = action_closure(w, vectors);
  Bimodule m;
  m.left = w.left;
  m.right = w.right;
  m.field = w.field;
  m.dim = basis.cols();
  for (const auto& op : w.lact) m.lact.push_back(restrict_to(basis, op));
  for (const auto& op : w.ract) m.ract.push_back(restrict_to(basis, op));
  return m;
}

Bimodule quotient_bimodule(const Bimodule& w, const Matrix& subvectors) {
  const Matrix basis = action_closure(w, subvectors);
  const QuotientSpace q = quotient_space(basis.transpose());
  Bimodule m;
  m.left = w.left;
  m.right = w.right;
  m.field = w.field;
  m.dim = q.quotient_dim;
  for (const auto& op : w.lact) m.lact.push_back(q.projection * op * q.section);
  for (const auto& op : w.ract) m.ract.push_back(q.projection * op * q.section);
  return m;
}

namespace {

Bimodule double_up(const Bimodule& m) {
  Bimodule two = m;
  two.dim = m.dim * 2;
  two.lact.clear();
  two.ract.clear();
  const Matrix i2 = Matrix::identity(m.field, 2);
  for (const auto& op : m.lact) two.lact.push_back(kron(i2, op));
  for (const auto& op : m.ract) two.ract.push_back(kron(i2, op));
  return two;
}

}  // namespace

Bimodule random_bimodule(std::uint64_t seed, const Algebra& a, const Algebra& b,
                         std::size_t maxdim) {
  Rng rng(seed);
  const Bimodule reg = regular_bimodule(a, b);
  for (int attempt = 0; attempt < 96; ++attempt) {
    Bimodule amb = rng.next(4) == 0 ? double_up(reg) : reg;
    // kernels and images of random endomorphisms are action-invariant,
    // which reaches proper pieces even in a scrambled basis
    const Matrix eb = hom_basis(amb, amb);
    Matrix endo(amb.field, amb.dim, amb.dim);
    for (std::size_t c = 0; c < eb.cols(); ++c) {
      const Scalar coef = rng.scalar(amb.field, -2, 2);
      if (coef.is_zero()) continue;
      endo = endo + unvec(amb.dim, amb.dim, eb.col(c)).scaled(coef);
    }
    Matrix carve = rng.next(2) == 0 ? kernel_basis(endo) : column_space_basis(endo);
    Bimodule out;
    switch (rng.next(3)) {
      case 0: out = span_sub_bimodule(amb, carve); break;
      case 1: out = quotient_bimodule(amb, carve); break;
      default: {
        const Matrix v = rng.matrix(amb.field, amb.dim, 1);
        out = rng.next(2) == 0 ? span_sub_bimodule(amb, v) : quotient_bimodule(amb, v);
        break;
      }
    }
    if (out.dim >= 1 && out.dim <= maxdim && validate_bimodule(out).ok()) return out;
  }
  throw GenerationError("random_bimodule: no candidate within bounds");
}

BimoduleMap random_hom(std::uint64_t seed, const Bimodule& src, const Bimodule& tgt) {
  Rng rng(seed);
  const Matrix basis = hom_basis(src, tgt);
  Matrix v(src.field, tgt.dim * src.dim, 1);
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    const Scalar coef = rng.scalar(src.field);
    for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, 0) += basis.at(r, c) * coef;
  }
  return BimoduleMap{src, tgt, unvec(tgt.dim, src.dim, v)};
}

}  // namespace morita
