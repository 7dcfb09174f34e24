#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "morita/matrix.hpp"

namespace morita {

struct RrefResult {
  Matrix r;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

// Reduced row-echelon form. Pivot choice is the first nonzero entry in
// column order, so the result is canonical for the row space.
RrefResult rref(const Matrix& m);         // dispatches to the OpenMP kernel
RrefResult rref_serial(const Matrix& m);  // reference implementation
RrefResult rref_parallel(const Matrix& m);

std::size_t rank(const Matrix& m);

// Columns form a basis of the right null space; m * basis == 0 exactly.
// Basis vectors are indexed by the free columns of rref(m), in order.
Matrix kernel_basis(const Matrix& m);

struct SolveResult {
  bool has_solution{false};
  Matrix x;                       // one exact solution, if any
  std::size_t solution_dim{0};    // dimension of the affine solution set
};

// Solves a*x = b for a single column b.
SolveResult solve_linear(const Matrix& a, const Matrix& b);

// Solves a*X = B columnwise; empty when any column is inconsistent.
std::optional<Matrix> solve_all_columns(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

// Canonical basis of the column space: pivot columns of the rref of the
// transpose, re-read as columns. Deterministic across runs.
Matrix column_space_basis(const Matrix& m);

// A finite-dimensional quotient of k^ambient by the span of relation rows.
// The quotient basis is the image of the non-pivot standard basis vectors.
struct QuotientSpace {
  std::size_t ambient_dim{0};
  std::size_t quotient_dim{0};
  Matrix projection;  // quotient_dim x ambient_dim; reduces mod relations
  Matrix section;     // ambient_dim x quotient_dim; lifts quotient basis
};

QuotientSpace quotient_space(const Matrix& relations);
QuotientSpace trivial_quotient(const Field& f, std::size_t dim);

}  // namespace morita
