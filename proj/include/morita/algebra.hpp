#pragma once

#include <cstddef>
#include <vector>

#include "morita/check.hpp"
#include "morita/linalg.hpp"

namespace morita {

// A finite-dimensional unital associative algebra presented by structure
// constants: e_i * e_j = sum_k c[i][j][k] e_k. Stored as the left
// multiplication operators L_i with L_i[k][j] = c[i][j][k].
struct Algebra {
  Field field;
  std::size_t dim{0};
  std::vector<Matrix> lmul;  // lmul[i] = matrix of x -> e_i * x
  Matrix unit;               // dim x 1 coordinates of 1

  // Matrix of x -> a*x for a coordinate column a.
  Matrix left_op(const Matrix& a) const;
  // Matrix of x -> x*b.
  Matrix right_op(const Matrix& b) const;
  // Right multiplication by the basis element e_j.
  Matrix rmul(std::size_t j) const;

  Scalar structure(std::size_t i, std::size_t j, std::size_t k) const {
    return lmul[i].at(k, j);
  }

  bool operator==(const Algebra& o) const;
};

// Builds the algebra from the raw structure tensor c[i][j][k].
Algebra make_algebra(const Field& f,
                     const std::vector<std::vector<std::vector<Scalar>>>& c,
                     const std::vector<Scalar>& unit);

// Checks associativity on all basis triples and both unit laws.
// Violations are report entries, not errors.
ValidationReport validate_algebra(const Algebra& a);

// Bilinear product of coordinate columns.
Matrix multiply(const Algebra& a, const Matrix& x, const Matrix& y);

bool is_idempotent(const Algebra& a, const Matrix& e);

}  // namespace morita
