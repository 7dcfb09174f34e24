#pragma once

#include <vector>

#include "morita/algebra.hpp"

namespace morita {

struct MiddleMismatchError : std::runtime_error {
  explicit MiddleMismatchError(const std::string& what)
      : std::runtime_error("middle algebra mismatch: " + what) {}
};

struct CellTypeError : std::runtime_error {
  explicit CellTypeError(const std::string& what)
      : std::runtime_error("cell type mismatch: " + what) {}
};

// An (A,B)-bimodule given by one action matrix per basis element of each
// algebra. Left actions multiply in order, right actions in reversed order,
// and the two commute.
struct Bimodule {
  Algebra left, right;
  Field field;
  std::size_t dim{0};
  std::vector<Matrix> lact;  // lact[i] : action of left basis e_i
  std::vector<Matrix> ract;  // ract[j] : action of right basis e_j

  Matrix left_action(const Matrix& a) const;   // a: left.dim x 1
  Matrix right_action(const Matrix& b) const;  // b: right.dim x 1

  bool operator==(const Bimodule& o) const;
};

ValidationReport validate_bimodule(const Bimodule& m);

// A as the (A,A)-bimodule 1_A.
Bimodule identity_bimodule(const Algebra& a);

// A right A-module viewed as a (k, A)-bimodule over the given ground algebra
// (which must be one-dimensional).
Bimodule right_module(const Algebra& ground, const Algebra& a,
                      const std::vector<Matrix>& ract);

// A 2-cell of Bim: a linear map commuting with both actions.
struct BimoduleMap {
  Bimodule src, tgt;
  Matrix mat;  // tgt.dim x src.dim

  bool operator==(const BimoduleMap& o) const {
    return src == o.src && tgt == o.tgt && mat == o.mat;
  }
};

BimoduleMap id_map(const Bimodule& m);
BimoduleMap compose(const BimoduleMap& g, const BimoduleMap& f);  // g after f

ValidationReport validate_map(const BimoduleMap& f);
bool is_intertwiner(const BimoduleMap& f);

// Row-major vectorisation used by the Hom-space solvers.
Matrix vec(const Matrix& m);
Matrix unvec(std::size_t rows, std::size_t cols, const Matrix& v);

// Homogeneous constraints cutting out Hom_{A,B}(src, tgt) inside the space
// of tgt.dim x src.dim matrices, and a basis of that Hom space.
Matrix hom_constraints(const Bimodule& src, const Bimodule& tgt);
Matrix hom_basis(const Bimodule& src, const Bimodule& tgt);

}  // namespace morita
