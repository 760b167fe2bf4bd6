#include "sparsecast/numerics/linsolve.hpp"

#include <cmath>

#include "sparsecast/error.hpp"

namespace sparsecast {

DenseMatrix cholesky_solve(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != a.cols()) throw DimensionError("cholesky_solve: A not square");
  if (b.rows() != a.rows()) throw DimensionError("cholesky_solve: B row mismatch");
  const std::size_t n = a.rows();

  // lower-triangular factor, in place over a copy
  DenseMatrix l = a;
  for (std::size_t j = 0; j < n; ++j) {
    double d = l(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (d <= 0.0) throw DomainError("cholesky_solve: matrix is not positive-definite");
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = l(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / ljj;
    }
  }

  DenseMatrix x = b;
  const std::size_t m = b.cols();
  // forward substitution L y = B
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < m; ++c) {
      double s = x(i, c);
      for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * x(k, c);
      x(i, c) = s / l(i, i);
    }
  }
  // back substitution L^T x = y
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t c = 0; c < m; ++c) {
      double s = x(ii, c);
      for (std::size_t k = ii + 1; k < n; ++k) s -= l(k, ii) * x(k, c);
      x(ii, c) = s / l(ii, ii);
    }
  }
  return x;
}

}  // namespace sparsecast
