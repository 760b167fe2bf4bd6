#include "sparsecast/numerics/sparse_sym.hpp"

#include "sparsecast/error.hpp"

namespace sparsecast {

SparseSymMatrix::SparseSymMatrix(const DenseMatrix& dense) {
  if (dense.rows() != dense.cols())
    throw DimensionError("SparseSymMatrix: matrix not square");
  if (!is_symmetric(dense, 1e-12))
    throw ArgumentError("SparseSymMatrix: matrix not symmetric");
  n_ = dense.rows();
  row_ptr_.assign(n_ + 1, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (dense(i, j) != 0.0) {
        col_.push_back(j);
        val_.push_back(dense(i, j));
      }
    }
    row_ptr_[i + 1] = col_.size();
  }
}

DenseMatrix SparseSymMatrix::apply(const DenseMatrix& x) const {
  DenseMatrix y(n_, x.cols(), 0.0);
  add_apply(y, x, 1.0);
  return y;
}

void SparseSymMatrix::add_apply(DenseMatrix& y, const DenseMatrix& x, double s) const {
  if (x.rows() != n_ || !y.same_shape(x))
    throw DimensionError("SparseSymMatrix::add_apply: shape mismatch");
  const std::size_t d = x.cols();
  for (std::size_t i = 0; i < n_; ++i) {
    double* yi = y.row(i);
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
      const double v = s * val_[k];
      const double* xj = x.row(col_[k]);
      for (std::size_t c = 0; c < d; ++c) yi[c] += v * xj[c];
    }
  }
}

DenseMatrix SparseSymMatrix::to_dense() const {
  DenseMatrix out(n_, n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
      out(i, col_[k]) = val_[k];
  return out;
}

}  // namespace sparsecast
