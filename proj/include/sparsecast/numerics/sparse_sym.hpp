#pragma once

#include <cstddef>
#include <vector>

#include "sparsecast/numerics/dense_matrix.hpp"

namespace sparsecast {

/// Symmetric sparse operator in CSR form. Graph convolutions multiply by the
/// normalized operator I + D^{-1/2} A D^{-1/2}; storing only the nonzeros is
/// what turns graph sparsity into training speed. Symmetry means the same
/// structure serves forward and adjoint products.
class SparseSymMatrix {
 public:
  SparseSymMatrix() = default;

  /// Build from a dense symmetric matrix, keeping entries with |v| > 0.
  explicit SparseSymMatrix(const DenseMatrix& dense);

  std::size_t dim() const { return n_; }
  std::size_t nnz() const { return col_.size(); }

  /// y = S * x, x of shape (n x d).
  DenseMatrix apply(const DenseMatrix& x) const;

  /// y += s * S * x.
  void add_apply(DenseMatrix& y, const DenseMatrix& x, double s = 1.0) const;

  DenseMatrix to_dense() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> row_ptr_;
  std::vector<std::size_t> col_;
  std::vector<double> val_;
};

}  // namespace sparsecast
