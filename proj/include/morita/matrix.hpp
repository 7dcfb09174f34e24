#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "morita/field.hpp"

namespace morita {

struct ShapeMismatchError : std::runtime_error {
  explicit ShapeMismatchError(const std::string& what)
      : std::runtime_error("shape mismatch: " + what) {}
};

// Dense matrix of exact scalars over one field. Equality is entrywise exact.
class Matrix {
 public:
  Matrix() : Matrix(Field::Q(), 0, 0) {}
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(const Field& f, std::size_t n);

  const Field& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;  // dispatches to the OpenMP kernel
  Matrix operator-() const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

  // Column j as a cols x 1 matrix, row i as 1 x cols.
  Matrix col(std::size_t j) const;
  Matrix row(std::size_t i) const;

  std::string str() const;

 private:
  Field f_;
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

// Kronecker product against the row-major pairing (i,j) |-> i*cols(b)+j
// used for tensor-product bases throughout.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron(const std::vector<Matrix>& ms);

// Horizontal / vertical concatenation.
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

// Reference and OpenMP multiplication kernels; identical results.
Matrix mul_serial(const Matrix& a, const Matrix& b);
Matrix mul_parallel(const Matrix& a, const Matrix& b);

}  // namespace morita
