#include "morita/algebra.hpp"

namespace morita {

Matrix Algebra::left_op(const Matrix& a) const {
  if (a.rows() != dim || a.cols() != 1) throw ShapeMismatchError("left_op");
  Matrix op(field, dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (a.at(i, 0).is_zero()) continue;
    op = op + lmul[i].scaled(a.at(i, 0));
  }
  return op;
}

Matrix Algebra::rmul(std::size_t j) const {
  Matrix op(field, dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) op.at(k, i) = structure(i, j, k);
  return op;
}

Matrix Algebra::right_op(const Matrix& b) const {
  if (b.rows() != dim || b.cols() != 1) throw ShapeMismatchError("right_op");
  Matrix op(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    if (b.at(j, 0).is_zero()) continue;
    op = op + rmul(j).scaled(b.at(j, 0));
  }
  return op;
}

bool Algebra::operator==(const Algebra& o) const {
  if (field != o.field || dim != o.dim || unit != o.unit) return false;
  for (std::size_t i = 0; i < dim; ++i)
    if (lmul[i] != o.lmul[i]) return false;
  return true;
}

Algebra make_algebra(const Field& f,
                     const std::vector<std::vector<std::vector<Scalar>>>& c,
                     const std::vector<Scalar>& unit) {
  Algebra a;
  a.field = f;
  a.dim = c.size();
  a.unit = Matrix(f, a.dim, 1);
  for (std::size_t i = 0; i < a.dim; ++i) a.unit.at(i, 0) = unit[i];
  a.lmul.reserve(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    Matrix L(f, a.dim, a.dim);
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) L.at(k, j) = c[i][j][k];
    a.lmul.push_back(L);
  }
  return a;
}

ValidationReport validate_algebra(const Algebra& a) {
  ValidationReport rep;
  const std::size_t n = a.dim;
  // (e_i e_j) e_l = e_i (e_j e_l), checked as operator identities L_{e_i e_j} vs L_i L_j
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix prod(a.field, n, 1);
      for (std::size_t k = 0; k < n; ++k) prod.at(k, 0) = a.structure(i, j, k);
      const Matrix lhs = a.left_op(prod);
      const Matrix rhs = a.lmul[i] * a.lmul[j];
      if (lhs != rhs) {
        rep.add("associativity",
                "i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
    }
  }
  const Matrix id = Matrix::identity(a.field, n);
  if (a.left_op(a.unit) != id) rep.add("left unit law");
  if (a.right_op(a.unit) != id) rep.add("right unit law");
  return rep;
}

Matrix multiply(const Algebra& a, const Matrix& x, const Matrix& y) {
  if (x.rows() != a.dim || y.rows() != a.dim || x.cols() != 1 || y.cols() != 1)
    throw ShapeMismatchError("algebra multiply");
  return a.left_op(x) * y;
}

bool is_idempotent(const Algebra& a, const Matrix& e) {
  return multiply(a, e, e) == e;
}

}  // namespace morita
