#include "sparsecast/numerics/sym_eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sparsecast/error.hpp"

namespace sparsecast {

namespace {

double offdiag_sq(const DenseMatrix& a) {
  double acc = 0.0;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) acc += a(i, j) * a(i, j);
  return 2.0 * acc;
}

}  // namespace

SymEig sym_eig(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("sym_eig: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) throw ArgumentError("sym_eig: empty matrix");

  double asym = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      asym = std::max(asym, std::fabs(m(i, j) - m(j, i)));
  if (asym > 1e-12 * std::max(1.0, m.max_abs()))
    throw ArgumentError("sym_eig: input is not symmetric within 1e-12");

  DenseMatrix a = m;
  symmetrize(a);
  check_finite(a, "sym_eig input");
  DenseMatrix q = DenseMatrix::identity(n);

  const double scale = std::max(1.0, a.frobenius_norm());
  const double tol = (1e-15 * scale) * (1e-15 * scale) * static_cast<double>(n * n);
  constexpr int kMaxSweeps = 100;

  int sweep = 0;
  while (offdiag_sq(a) > tol) {
    if (++sweep > kMaxSweeps) throw NumericError("sym_eig: Jacobi sweeps did not converge");
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t r = p + 1; r < n; ++r) {
        const double apq = a(p, r);
        if (std::fabs(apq) <= 1e-300) continue;
        const double theta = (a(r, r) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        const double app = a(p, p), arr = a(r, r);
        a(p, p) = app - t * apq;
        a(r, r) = arr + t * apq;
        a(p, r) = 0.0;
        a(r, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k != p && k != r) {
            const double akp = a(k, p), akr = a(k, r);
            a(k, p) = a(p, k) = akp - s * (akr + tau * akp);
            a(k, r) = a(r, k) = akr + s * (akp - tau * akr);
          }
          const double qkp = q(k, p), qkr = q(k, r);
          q(k, p) = qkp - s * (qkr + tau * qkp);
          q(k, r) = qkr + s * (qkp - tau * qkr);
        }
      }
    }
  }

  // sort ascending, permuting eigenvector columns to match
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  SymEig out;
  out.eigenvalues.resize(n);
  out.eigenvectors = DenseMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = q(i, order[k]);
  }
  return out;
}

DenseMatrix spectral_map(const SymEig& eig, const std::function<double(double)>& f) {
  const std::size_t n = eig.eigenvalues.size();
  const DenseMatrix& q = eig.eigenvectors;
  DenseMatrix out(n, n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double v = f(eig.eigenvalues[k]);
    if (v == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const double qik = v * q(i, k);
      if (qik == 0.0) continue;
      double* oi = out.row(i);
      for (std::size_t j = 0; j < n; ++j) oi[j] += qik * q(j, k);
    }
  }
  return out;
}

DenseMatrix symmetric_inverse(const DenseMatrix& m) {
  SymEig eig = sym_eig(m);
  if (eig.min_eigenvalue() <= 0.0)
    throw DomainError("symmetric_inverse: matrix is not positive-definite");
  return spectral_map(eig, [](double x) { return 1.0 / x; });
}

}  // namespace sparsecast
