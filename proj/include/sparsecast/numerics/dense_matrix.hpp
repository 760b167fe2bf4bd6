#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace sparsecast {

/// Dense row-major matrix of 64-bit floats. This is the storage type for
/// series panels, covariance and precision matrices, adjacency matrices and
/// network weights alike; everything in the project runs at double precision.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  double* row(std::size_t i) { return data_.data() + i * cols_; }
  const double* row(std::size_t i) const { return data_.data() + i * cols_; }

  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }

  void fill(double v);
  DenseMatrix transposed() const;

  DenseMatrix& operator+=(const DenseMatrix& o);
  DenseMatrix& operator-=(const DenseMatrix& o);
  DenseMatrix& operator*=(double s);

  bool same_shape(const DenseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

  double frobenius_norm() const;
  double max_abs() const;
  double sum() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator*(DenseMatrix a, double s);

/// C = A * B.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

/// C += s * A * B, C += s * A * B^T, C += s * A^T * B. The accumulate forms
/// exist so gradient passes avoid materializing transposes.
void add_matmul_nn(DenseMatrix& c, const DenseMatrix& a, const DenseMatrix& b, double s = 1.0);
void add_matmul_nt(DenseMatrix& c, const DenseMatrix& a, const DenseMatrix& b, double s = 1.0);
void add_matmul_tn(DenseMatrix& c, const DenseMatrix& a, const DenseMatrix& b, double s = 1.0);

/// M <- (M + M^T) / 2. Throws DimensionError on non-square input.
void symmetrize(DenseMatrix& m);

double max_abs_offdiag(const DenseMatrix& m);
double frobenius_distance(const DenseMatrix& a, const DenseMatrix& b);

/// Throws NumericError naming `context` if any entry is NaN or infinite.
void check_finite(const DenseMatrix& m, const char* context);

bool is_symmetric(const DenseMatrix& m, double tol = 1e-12);

}  // namespace sparsecast
