#pragma once

#include <vector>

#include "polyvar/rational.hpp"

namespace polyvar {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

/// In-place reduced row echelon form with deterministic pivoting (first
/// nonzero row per column). Returns the pivot columns in order.
std::vector<size_t> rref(Matrix& m);

size_t rank(Matrix m);

/// Basis of the right nullspace of an nrows x ncols matrix, one vector per
/// free column, deterministic.
Matrix nullspace(const Matrix& m, size_t ncols);

/// Exact determinant (square matrix) via fraction-free-ish Gaussian elimination.
Rational determinant(Matrix m);

}  // namespace polyvar
