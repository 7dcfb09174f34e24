#include "morita/bimodule.hpp"

namespace morita {

Matrix Bimodule::left_action(const Matrix& a) const {
  if (a.rows() != left.dim || a.cols() != 1) throw ShapeMismatchError("left_action");
  Matrix op(field, dim, dim);
  for (std::size_t i = 0; i < left.dim; ++i) {
    if (a.at(i, 0).is_zero()) continue;
    op = op + lact[i].scaled(a.at(i, 0));
  }
  return op;
}

Matrix Bimodule::right_action(const Matrix& b) const {
  if (b.rows() != right.dim || b.cols() != 1) throw ShapeMismatchError("right_action");
  Matrix op(field, dim, dim);
  for (std::size_t j = 0; j < right.dim; ++j) {
    if (b.at(j, 0).is_zero()) continue;
    op = op + ract[j].scaled(b.at(j, 0));
  }
  return op;
}

bool Bimodule::operator==(const Bimodule& o) const {
  if (field != o.field || dim != o.dim) return false;
  if (!(left == o.left) || !(right == o.right)) return false;
  for (std::size_t i = 0; i < left.dim; ++i)
    if (lact[i] != o.lact[i]) return false;
  for (std::size_t j = 0; j < right.dim; ++j)
    if (ract[j] != o.ract[j]) return false;
  return true;
}

ValidationReport validate_bimodule(const Bimodule& m) {
  ValidationReport rep;
  const Matrix id = Matrix::identity(m.field, m.dim);
  if (m.left_action(m.left.unit) != id) rep.add("left action unital");
  if (m.right_action(m.right.unit) != id) rep.add("right action unital");
  // L(e_i e_j) = L(e_i) L(e_j)
  for (std::size_t i = 0; i < m.left.dim; ++i)
    for (std::size_t j = 0; j < m.left.dim; ++j) {
      Matrix prod(m.field, m.left.dim, 1);
      for (std::size_t k = 0; k < m.left.dim; ++k) prod.at(k, 0) = m.left.structure(i, j, k);
      if (m.left_action(prod) != m.lact[i] * m.lact[j]) {
        rep.add("left action multiplicative",
                "i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
    }
  // R(e_i e_j) = R(e_j) R(e_i)
  for (std::size_t i = 0; i < m.right.dim; ++i)
    for (std::size_t j = 0; j < m.right.dim; ++j) {
      Matrix prod(m.field, m.right.dim, 1);
      for (std::size_t k = 0; k < m.right.dim; ++k) prod.at(k, 0) = m.right.structure(i, j, k);
      if (m.right_action(prod) != m.ract[j] * m.ract[i]) {
        rep.add("right action antimultiplicative",
                "i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
    }
  for (std::size_t i = 0; i < m.left.dim; ++i)
    for (std::size_t j = 0; j < m.right.dim; ++j) {
      if (m.lact[i] * m.ract[j] != m.ract[j] * m.lact[i]) {
        rep.add("actions commute", "a=" + std::to_string(i) + " b=" + std::to_string(j));
      }
    }
  return rep;
}

Bimodule identity_bimodule(const Algebra& a) {
  Bimodule m;
  m.left = a;
  m.right = a;
  m.field = a.field;
  m.dim = a.dim;
  m.lact = a.lmul;
  m.ract.reserve(a.dim);
  for (std::size_t j = 0; j < a.dim; ++j) m.ract.push_back(a.rmul(j));
  return m;
}

Bimodule right_module(const Algebra& ground, const Algebra& a,
                      const std::vector<Matrix>& ract) {
  if (ground.dim != 1) throw ShapeMismatchError("ground algebra must be 1-dimensional");
  if (ract.size() != a.dim) throw ShapeMismatchError("one action matrix per basis element");
  Bimodule m;
  m.left = ground;
  m.right = a;
  m.field = a.field;
  m.dim = ract[0].rows();
  m.lact = {Matrix::identity(a.field, m.dim).scaled(ground.unit.at(0, 0).inv())};
  m.ract = ract;
  return m;
}

BimoduleMap id_map(const Bimodule& m) {
  return BimoduleMap{m, m, Matrix::identity(m.field, m.dim)};
}

BimoduleMap compose(const BimoduleMap& g, const BimoduleMap& f) {
  if (!(g.src == f.tgt)) throw CellTypeError("compose: inner cells differ");
  return BimoduleMap{f.src, g.tgt, g.mat * f.mat};
}

bool is_intertwiner(const BimoduleMap& f) { return validate_map(f).ok(); }

ValidationReport validate_map(const BimoduleMap& f) {
  ValidationReport rep;
  if (!(f.src.left == f.tgt.left) || !(f.src.right == f.tgt.right)) {
    rep.add("map endpoints over same algebras");
    return rep;
  }
  for (std::size_t i = 0; i < f.src.left.dim; ++i) {
    if (f.mat * f.src.lact[i] != f.tgt.lact[i] * f.mat) {
      rep.add("commutes with left action", "a=" + std::to_string(i));
    }
  }
  for (std::size_t j = 0; j < f.src.right.dim; ++j) {
    if (f.mat * f.src.ract[j] != f.tgt.ract[j] * f.mat) {
      rep.add("commutes with right action", "b=" + std::to_string(j));
    }
  }
  return rep;
}

Matrix vec(const Matrix& m) {
  Matrix v(m.field(), m.rows() * m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.at(i * m.cols() + j, 0) = m.at(i, j);
  return v;
}

Matrix unvec(std::size_t rows, std::size_t cols, const Matrix& v) {
  Matrix m(v.field(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = v.at(i * cols + j, 0);
  return m;
}

Matrix hom_constraints(const Bimodule& src, const Bimodule& tgt) {
  const Field f = src.field;
  const std::size_t s = src.dim, t = tgt.dim;
  const std::size_t unknowns = t * s;
  const std::size_t nrows = (src.left.dim + src.right.dim) * t * s;
  Matrix con(f, nrows, unknowns);
  std::size_t r = 0;
  auto add_block = [&](const Matrix& srcAct, const Matrix& tgtAct) {
    // F * srcAct - tgtAct * F = 0, one row per output entry (i,k)
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t k = 0; k < s; ++k) {
        for (std::size_t j = 0; j < s; ++j)
          con.at(r, i * s + j) += srcAct.at(j, k);
        for (std::size_t m2 = 0; m2 < t; ++m2)
          con.at(r, m2 * s + k) -= tgtAct.at(i, m2);
        ++r;
      }
  };
  for (std::size_t a = 0; a < src.left.dim; ++a) add_block(src.lact[a], tgt.lact[a]);
  for (std::size_t b = 0; b < src.right.dim; ++b) add_block(src.ract[b], tgt.ract[b]);
  return con;
}

Matrix hom_basis(const Bimodule& src, const Bimodule& tgt) {
  return kernel_basis(hom_constraints(src, tgt));
}

}  // namespace morita
