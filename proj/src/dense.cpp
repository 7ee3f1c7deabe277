#include "snipal/dense.hpp"

#include <cmath>

namespace snipal {

Vec DenseMatrix::multiply(const Vec& x) const {
  check_size(x, static_cast<std::size_t>(cols_), "DenseMatrix::multiply");
  Vec y(rows_, 0.0);
  for (int i = 0; i < rows_; ++i) {
    const double* row = &data_[static_cast<std::size_t>(i) * cols_];
    double s = 0.0;
    for (int j = 0; j < cols_; ++j) s += row[j] * x[j];
    y[i] = s;
  }
  return y;
}

Vec DenseMatrix::multiply_transpose(const Vec& x) const {
  check_size(x, static_cast<std::size_t>(rows_), "DenseMatrix::multiply_transpose");
  Vec y(cols_, 0.0);
  for (int i = 0; i < rows_; ++i) {
    const double* row = &data_[static_cast<std::size_t>(i) * cols_];
    const double xi = x[i];
    for (int j = 0; j < cols_; ++j) y[j] += row[j] * xi;
  }
  return y;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DenseCholesky::DenseCholesky(const DenseMatrix& mat) : n_(mat.rows()), l_(mat.rows(), mat.rows()) {
  if (mat.rows() != mat.cols()) throw std::invalid_argument("DenseCholesky: matrix not square");
  for (int j = 0; j < n_; ++j) {
    double d = mat(j, j);
    for (int k = 0; k < j; ++k) d -= l_(j, k) * l_(j, k);
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw CholeskyError("Cholesky failed: non-positive pivot at index " + std::to_string(j), j);
    }
    const double ljj = std::sqrt(d);
    l_(j, j) = ljj;
    for (int i = j + 1; i < n_; ++i) {
      double s = mat(i, j);
      for (int k = 0; k < j; ++k) s -= l_(i, k) * l_(j, k);
      l_(i, j) = s / ljj;
    }
  }
}

Vec DenseCholesky::solve(const Vec& rhs) const {
  check_size(rhs, static_cast<std::size_t>(n_), "DenseCholesky::solve");
  Vec y(rhs);
  // forward substitution L y = rhs
  for (int i = 0; i < n_; ++i) {
    double s = y[i];
    for (int k = 0; k < i; ++k) s -= l_(i, k) * y[k];
    y[i] = s / l_(i, i);
  }
  // back substitution L^T x = y
  for (int i = n_ - 1; i >= 0; --i) {
    double s = y[i];
    for (int k = i + 1; k < n_; ++k) s -= l_(k, i) * y[k];
    y[i] = s / l_(i, i);
  }
  return y;
}

Vec dense_cholesky_solve(const DenseMatrix& mat, const Vec& rhs) {
  return DenseCholesky(mat).solve(rhs);
}

}  // namespace snipal
