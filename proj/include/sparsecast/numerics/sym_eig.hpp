#pragma once

#include <functional>
#include <vector>

#include "sparsecast/numerics/dense_matrix.hpp"

namespace sparsecast {

/// Eigendecomposition of a symmetric matrix: M = Q diag(eigenvalues) Q^T,
/// eigenvalues ascending, columns of Q orthonormal.
struct SymEig {
  std::vector<double> eigenvalues;
  DenseMatrix eigenvectors;  // column k pairs with eigenvalues[k]

  double min_eigenvalue() const { return eigenvalues.front(); }
  double max_eigenvalue() const { return eigenvalues.back(); }
};

/// Cyclic Jacobi eigensolver. The input is symmetrized via (M + M^T)/2
/// before sweeping; inputs further than 1e-12 from symmetric are rejected.
/// Throws DimensionError for non-square input, NumericError if the sweep
/// cap is reached without convergence.
SymEig sym_eig(const DenseMatrix& m);

/// Q f(diag) Q^T for a scalar map applied to the eigenvalues. Used for the
/// matrix inverse and the log-det proximal step.
DenseMatrix spectral_map(const SymEig& eig, const std::function<double(double)>& f);

/// Inverse of a symmetric positive-definite matrix via sym_eig.
/// Throws DomainError when any eigenvalue is <= 0.
DenseMatrix symmetric_inverse(const DenseMatrix& m);

}  // namespace sparsecast
