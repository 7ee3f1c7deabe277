#ifndef SNIPAL_DENSE_HPP_
#define SNIPAL_DENSE_HPP_

#include <string>
#include <vector>

#include "snipal/vec.hpp"

namespace snipal {

// Row-major dense matrix. Sized for factorizations of the m x m or p x p
// Newton systems at desk scale; not a general-purpose matrix class.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {}

  static DenseMatrix identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }

  Vec multiply(const Vec& x) const;            // A x
  Vec multiply_transpose(const Vec& x) const;  // A^T x
  DenseMatrix transpose() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

struct CholeskyError : std::runtime_error {
  CholeskyError(const std::string& msg, int pivot) : std::runtime_error(msg), pivot_index(pivot) {}
  int pivot_index;
};

// Cholesky factorization of a symmetric positive definite matrix with the
// factor cached for repeated right-hand sides. Throws CholeskyError naming
// the offending pivot index when the matrix is not positive definite.
class DenseCholesky {
 public:
  explicit DenseCholesky(const DenseMatrix& mat);

  Vec solve(const Vec& rhs) const;
  int dim() const { return n_; }

 private:
  int n_;
  DenseMatrix l_;  // lower-triangular factor
};

// Convenience wrapper: factor once, solve once.
Vec dense_cholesky_solve(const DenseMatrix& mat, const Vec& rhs);

}  // namespace snipal

#endif  // SNIPAL_DENSE_HPP_
