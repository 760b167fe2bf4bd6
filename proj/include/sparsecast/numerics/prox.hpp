#pragma once

#include <cmath>

#include "sparsecast/error.hpp"
#include "sparsecast/numerics/dense_matrix.hpp"

namespace sparsecast {

/// sign(x) * max(|x| - kappa, 0). Throws ArgumentError for kappa < 0.
inline double soft_threshold(double x, double kappa) {
  if (kappa < 0.0) throw ArgumentError("soft_threshold: kappa must be nonnegative");
  if (x > kappa) return x - kappa;
  if (x < -kappa) return x + kappa;
  return 0.0;
}

/// Elementwise soft threshold.
inline DenseMatrix soft_threshold(const DenseMatrix& m, double kappa) {
  if (kappa < 0.0) throw ArgumentError("soft_threshold: kappa must be nonnegative");
  DenseMatrix out = m;
  for (double& x : out.data()) {
    if (x > kappa)
      x -= kappa;
    else if (x < -kappa)
      x += kappa;
    else
      x = 0.0;
  }
  return out;
}

/// Soft threshold applied to off-diagonal entries only; the diagonal passes
/// through untouched. Used when the L1 penalty excludes the diagonal.
inline DenseMatrix soft_threshold_offdiag(const DenseMatrix& m, double kappa) {
  if (m.rows() != m.cols()) throw DimensionError("soft_threshold_offdiag: matrix not square");
  DenseMatrix out = soft_threshold(m, kappa);
  for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) = m(i, i);
  return out;
}

}  // namespace sparsecast
