#include "morita/tensor.hpp"

#include <numeric>

namespace morita {

namespace {

// Relation rows of the one-shot chain quotient: at every junction t,
// (..., x_i . b, x_j, ...) - (..., x_i, b . x_j, ...) over all basis choices.
Matrix chain_relations(const std::vector<Bimodule>& factors) {
  const Field f = factors[0].field;
  std::vector<std::size_t> dims;
  for (const auto& m : factors) dims.push_back(m.dim);
  const std::size_t total =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  std::size_t nrows = 0;
  for (std::size_t t = 0; t + 1 < factors.size(); ++t) {
    nrows += factors[t].right.dim * total;
  }
  Matrix rel(f, nrows, total);
  std::size_t r = 0;
  for (std::size_t t = 0; t + 1 < factors.size(); ++t) {
    const Algebra& mid = factors[t].right;
    std::size_t pre = 1, post = 1;
    for (std::size_t s = 0; s < t; ++s) pre *= dims[s];
    for (std::size_t s = t + 2; s < dims.size(); ++s) post *= dims[s];
    const std::size_t di = dims[t], dj = dims[t + 1];
    for (std::size_t b = 0; b < mid.dim; ++b) {
      const Matrix& R = factors[t].ract[b];
      const Matrix& L = factors[t + 1].lact[b];
      for (std::size_t p = 0; p < pre; ++p)
        for (std::size_t i = 0; i < di; ++i)
          for (std::size_t j = 0; j < dj; ++j)
            for (std::size_t qd = 0; qd < post; ++qd) {
              for (std::size_t k = 0; k < di; ++k) {
                if (R.at(k, i).is_zero()) continue;
                rel.at(r, ((p * di + k) * dj + j) * post + qd) += R.at(k, i);
              }
              for (std::size_t l = 0; l < dj; ++l) {
                if (L.at(l, j).is_zero()) continue;
                rel.at(r, ((p * di + i) * dj + l) * post + qd) -= L.at(l, j);
              }
              ++r;
            }
    }
  }
  return rel;
}

}  // namespace

Chain make_chain(const std::vector<Bimodule>& factors) {
  if (factors.empty()) throw ShapeMismatchError("empty chain");
  for (std::size_t t = 0; t + 1 < factors.size(); ++t) {
    if (!(factors[t].right == factors[t + 1].left)) {
      throw MiddleMismatchError("chain junction " + std::to_string(t));
    }
  }
  Chain c;
  c.factors = factors;
  if (factors.size() == 1) {
    c.q = trivial_quotient(factors[0].field, factors[0].dim);
    c.mod = factors[0];
    return c;
  }
  c.q = quotient_space(chain_relations(factors));

  Bimodule m;
  m.left = factors.front().left;
  m.right = factors.back().right;
  m.field = factors[0].field;
  m.dim = c.q.quotient_dim;
  std::vector<std::size_t> dims;
  for (const auto& x : factors) dims.push_back(x.dim);
  const std::size_t rest_after_first =
      std::accumulate(dims.begin() + 1, dims.end(), std::size_t{1}, std::multiplies<>());
  const std::size_t rest_before_last =
      std::accumulate(dims.begin(), dims.end() - 1, std::size_t{1}, std::multiplies<>());
  for (std::size_t i = 0; i < m.left.dim; ++i) {
    const Matrix amb = kron(factors.front().lact[i],
                            Matrix::identity(m.field, rest_after_first));
    m.lact.push_back(c.q.projection * amb * c.q.section);
  }
  for (std::size_t j = 0; j < m.right.dim; ++j) {
    const Matrix amb = kron(Matrix::identity(m.field, rest_before_last),
                            factors.back().ract[j]);
    m.ract.push_back(c.q.projection * amb * c.q.section);
  }
  c.mod = m;
  return c;
}

TensorBimodule tensor_over(const Bimodule& m, const Bimodule& n) {
  if (!(m.right == n.left)) throw MiddleMismatchError("tensor_over");
  const Chain c = make_chain({m, n});
  return TensorBimodule{m, n, c.q, c.mod};
}

BimoduleMap induced_map(const BimoduleMap& f, const BimoduleMap& g,
                        const TensorBimodule& src, const TensorBimodule& dst) {
  if (!(f.src == src.mfac) || !(g.src == src.nfac) || !(f.tgt == dst.mfac) ||
      !(g.tgt == dst.nfac)) {
    throw CellTypeError("induced_map factors");
  }
  const Matrix amb = kron(f.mat, g.mat);
  const Matrix reduced = dst.q.projection * amb;
  const Matrix relbasis = kernel_basis(src.q.projection);
  if (relbasis.cols() > 0 && !(reduced * relbasis).is_zero()) {
    throw IllDefinedMapError("f tensor g does not preserve relations");
  }
  return BimoduleMap{src.mod, dst.mod, reduced * src.q.section};
}

ChainOp chain_id(const Chain& c) {
  return ChainOp{c, c, Matrix::identity(c.mod.field, c.mod.dim)};
}

ChainOp chain_op(const Chain& src, const Chain& dst, const Matrix& mat) {
  if (mat.rows() != dst.mod.dim || mat.cols() != src.mod.dim) {
    throw ShapeMismatchError("chain_op matrix");
  }
  return ChainOp{src, dst, mat};
}

namespace {
bool same_factors(const std::vector<Bimodule>& a, const std::vector<Bimodule>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}
}  // namespace

ChainOp chain_compose(const ChainOp& g, const ChainOp& f) {
  if (!same_factors(g.src.factors, f.dst.factors)) {
    throw CellTypeError("chain_compose seam");
  }
  return ChainOp{f.src, g.dst, g.mat * f.mat};
}

ChainOp chain_at(const Chain& whole_src, std::size_t pos, const ChainOp& sub,
                 bool verify) {
  const std::size_t len = sub.src.factors.size();
  if (pos + len > whole_src.factors.size()) throw ShapeMismatchError("chain_at range");
  for (std::size_t i = 0; i < len; ++i) {
    if (!(whole_src.factors[pos + i] == sub.src.factors[i])) {
      throw CellTypeError("chain_at: factors at position do not match");
    }
  }
  std::vector<Bimodule> dst_factors;
  dst_factors.insert(dst_factors.end(), whole_src.factors.begin(),
                     whole_src.factors.begin() + pos);
  dst_factors.insert(dst_factors.end(), sub.dst.factors.begin(), sub.dst.factors.end());
  dst_factors.insert(dst_factors.end(), whole_src.factors.begin() + pos + len,
                     whole_src.factors.end());
  const Chain dst = make_chain(dst_factors);

  const Field f = whole_src.mod.field;
  std::size_t pre = 1, post = 1;
  for (std::size_t i = 0; i < pos; ++i) pre *= whole_src.factors[i].dim;
  for (std::size_t i = pos + len; i < whole_src.factors.size(); ++i)
    post *= whole_src.factors[i].dim;
  const Matrix flat = sub.dst.q.section * sub.mat * sub.src.q.projection;
  const Matrix amb = kron({Matrix::identity(f, pre), flat, Matrix::identity(f, post)});
  const Matrix reduced = dst.q.projection * amb;
  if (verify) {
    const Matrix relbasis = kernel_basis(whole_src.q.projection);
    if (relbasis.cols() > 0 && !(reduced * relbasis).is_zero()) {
      throw IllDefinedMapError("chain_at: sub map does not preserve relations");
    }
  }
  return ChainOp{whole_src, dst, reduced * whole_src.q.section};
}

namespace {

Matrix left_absorb_matrix(const Bimodule& x) {
  // flat(1_A, X) -> X, e_i tensor x_j |-> e_i . x_j
  const std::size_t na = x.left.dim;
  Matrix u(x.field, x.dim, na * x.dim);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < x.dim; ++j)
      for (std::size_t k = 0; k < x.dim; ++k)
        u.at(k, i * x.dim + j) = x.lact[i].at(k, j);
  return u;
}

Matrix right_absorb_matrix(const Bimodule& x) {
  // flat(X, 1_B) -> X, x_i tensor e_j |-> x_i . e_j
  const std::size_t nb = x.right.dim;
  Matrix u(x.field, x.dim, x.dim * nb);
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < x.dim; ++k)
        u.at(k, i * nb + j) = x.ract[j].at(k, i);
  return u;
}

}  // namespace

ChainOp absorb_left(const Bimodule& x) {
  const Chain src = make_chain({identity_bimodule(x.left), x});
  const Chain dst = make_chain({x});
  return ChainOp{src, dst, left_absorb_matrix(x) * src.q.section};
}

ChainOp insert_left(const Bimodule& x) {
  const Chain src = make_chain({x});
  const Chain dst = make_chain({identity_bimodule(x.left), x});
  // x |-> 1 tensor x
  Matrix e(x.field, x.left.dim * x.dim, x.dim);
  for (std::size_t i = 0; i < x.left.dim; ++i)
    for (std::size_t j = 0; j < x.dim; ++j)
      e.at(i * x.dim + j, j) = x.left.unit.at(i, 0);
  return ChainOp{src, dst, dst.q.projection * e};
}

ChainOp absorb_right(const Bimodule& x) {
  const Chain src = make_chain({x, identity_bimodule(x.right)});
  const Chain dst = make_chain({x});
  return ChainOp{src, dst, right_absorb_matrix(x) * src.q.section};
}

ChainOp insert_right(const Bimodule& x) {
  const Chain src = make_chain({x});
  const Chain dst = make_chain({x, identity_bimodule(x.right)});
  Matrix e(x.field, x.dim * x.right.dim, x.dim);
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t j = 0; j < x.right.dim; ++j)
      e.at(i * x.right.dim + j, i) = x.right.unit.at(j, 0);
  return ChainOp{src, dst, dst.q.projection * e};
}

ChainOp iota(const Bimodule& x) { return chain_compose(insert_right(x), absorb_left(x)); }

ChainOp iota_inv(const Bimodule& x) {
  return chain_compose(insert_left(x), absorb_right(x));
}

ChainOp collapse2(const Bimodule& x, const Bimodule& y) {
  const Chain src = make_chain({x, y});
  const Chain dst = make_chain({src.mod});
  return ChainOp{src, dst, Matrix::identity(x.field, src.mod.dim)};
}

ChainOp expand2(const Bimodule& x, const Bimodule& y) {
  const Chain dst = make_chain({x, y});
  const Chain src = make_chain({dst.mod});
  return ChainOp{src, dst, Matrix::identity(x.field, dst.mod.dim)};
}

ChainOp lift1(const BimoduleMap& f) {
  return ChainOp{make_chain({f.src}), make_chain({f.tgt}), f.mat};
}

AssocPair associator3(const Bimodule& x, const Bimodule& y, const Bimodule& z) {
  const Field f = x.field;
  const TensorBimodule xy = tensor_over(x, y);
  const TensorBimodule xy_z = tensor_over(xy.mod, z);
  const TensorBimodule yz = tensor_over(y, z);
  const TensorBimodule x_yz = tensor_over(x, yz.mod);
  const Matrix iz = Matrix::identity(f, z.dim);
  const Matrix ix = Matrix::identity(f, x.dim);
  // through the shared flat triple space (i,j,k) |-> (i*dimY + j)*dimZ + k
  const Matrix can_l = xy_z.q.projection * kron(xy.q.projection, iz);
  const Matrix sec_l = kron(xy.q.section, iz) * xy_z.q.section;
  const Matrix can_r = x_yz.q.projection * kron(ix, yz.q.projection);
  const Matrix sec_r = kron(ix, yz.q.section) * x_yz.q.section;
  return AssocPair{BimoduleMap{xy_z.mod, x_yz.mod, can_r * sec_l},
                   BimoduleMap{x_yz.mod, xy_z.mod, can_l * sec_r}};
}

UnitorPair left_unitor(const Bimodule& x) {
  const ChainOp a = absorb_left(x);
  const ChainOp b = insert_left(x);
  const Bimodule src = a.src.mod;
  return UnitorPair{BimoduleMap{src, x, a.mat}, BimoduleMap{x, src, b.mat}};
}

UnitorPair right_unitor(const Bimodule& x) {
  const ChainOp a = absorb_right(x);
  const ChainOp b = insert_right(x);
  const Bimodule src = a.src.mod;
  return UnitorPair{BimoduleMap{src, x, a.mat}, BimoduleMap{x, src, b.mat}};
}

}  // namespace morita
