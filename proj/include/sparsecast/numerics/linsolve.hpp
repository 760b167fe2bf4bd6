#pragma once

#include "sparsecast/numerics/dense_matrix.hpp"

namespace sparsecast {

/// Solves A X = B for symmetric positive-definite A via Cholesky.
/// Throws DomainError when A is not positive-definite.
DenseMatrix cholesky_solve(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace sparsecast
