#ifndef SNIPAL_LINOP_HPP_
#define SNIPAL_LINOP_HPP_

#include <functional>
#include <memory>
#include <vector>

#include "snipal/dense.hpp"
#include "snipal/vec.hpp"

namespace snipal {

// Abstract m x n linear map with exact adjoint. Operators are immutable
// after construction and shared through shared_ptr<const LinearOperator>.
class LinearOperator : public std::enable_shared_from_this<LinearOperator> {
 public:
  virtual ~LinearOperator() = default;

  virtual int rows() const = 0;
  virtual int cols() const = 0;

  virtual void apply(const Vec& x, Vec& y) const = 0;            // y = A x
  virtual void apply_transpose(const Vec& y, Vec& x) const = 0;  // x = A^T y

  Vec apply(const Vec& x) const {
    Vec y(rows());
    apply(x, y);
    return y;
  }
  Vec apply_transpose(const Vec& y) const {
    Vec x(cols());
    apply_transpose(y, x);
    return x;
  }

  // Operator restricted to the given columns (A_J). The default is a lazy
  // scatter-gather view onto this operator; explicit sparse storage
  // overrides it with a materialized submatrix.
  virtual std::shared_ptr<const LinearOperator> column_subset(std::vector<int> indices) const;
};

using LinOpPtr = std::shared_ptr<const LinearOperator>;

struct Triplet {
  int row;
  int col;
  double value;
};

// Explicit sparse matrix in dual compressed storage: row-major (CSR) for
// A x and column-major (CSC) for A^T y and column extraction.
class SparseMatrix final : public LinearOperator {
 public:
  SparseMatrix(int rows, int cols, const std::vector<Triplet>& triplets);

  static std::shared_ptr<SparseMatrix> from_dense(const DenseMatrix& dense);

  int rows() const override { return rows_; }
  int cols() const override { return cols_; }
  std::size_t nnz() const { return csc_values_.size(); }

  void apply(const Vec& x, Vec& y) const override;
  void apply_transpose(const Vec& y, Vec& x) const override;

  std::shared_ptr<const LinearOperator> column_subset(std::vector<int> indices) const override;

  // CSC column access: entry k of column j is (col_row(j,k), col_value(j,k)).
  int col_nnz(int j) const { return csc_start_[j + 1] - csc_start_[j]; }
  int col_row(int j, int k) const { return csc_rows_[csc_start_[j] + k]; }
  double col_value(int j, int k) const { return csc_values_[csc_start_[j] + k]; }

  std::vector<Triplet> triplets() const;  // column-major order

 private:
  int rows_, cols_;
  // CSC
  std::vector<int> csc_start_;  // size cols_+1
  std::vector<int> csc_rows_;
  std::vector<double> csc_values_;
  // CSR
  std::vector<int> csr_start_;  // size rows_+1
  std::vector<int> csr_cols_;
  std::vector<double> csr_values_;
};

// Kronecker product D (x) B of two dense factors, applied without forming
// the product: (D (x) B) vec(X) = vec(B X D^T).
class KroneckerOperator final : public LinearOperator {
 public:
  KroneckerOperator(DenseMatrix d, DenseMatrix b);

  int rows() const override { return d_.rows() * b_.rows(); }
  int cols() const override { return d_.cols() * b_.cols(); }

  void apply(const Vec& x, Vec& y) const override;
  void apply_transpose(const Vec& y, Vec& x) const override;

 private:
  DenseMatrix d_;
  DenseMatrix b_;
};

// Vertical concatenation [A1; A2; ...]; all blocks share the column count.
class VStackOperator final : public LinearOperator {
 public:
  explicit VStackOperator(std::vector<LinOpPtr> blocks);

  int rows() const override { return rows_; }
  int cols() const override { return cols_; }

  void apply(const Vec& x, Vec& y) const override;
  void apply_transpose(const Vec& y, Vec& x) const override;

 private:
  std::vector<LinOpPtr> blocks_;
  int rows_, cols_;
};

// Horizontal concatenation [A1, A2, ...]; all blocks share the row count.
class HStackOperator final : public LinearOperator {
 public:
  explicit HStackOperator(std::vector<LinOpPtr> blocks);

  int rows() const override { return rows_; }
  int cols() const override { return cols_; }

  void apply(const Vec& x, Vec& y) const override;
  void apply_transpose(const Vec& y, Vec& x) const override;

 private:
  std::vector<LinOpPtr> blocks_;
  int rows_, cols_;
};

// Lazy column-subset view onto a parent operator. Subsetting a subset view
// composes the index lists instead of stacking views.
class ColumnSubsetView final : public LinearOperator {
 public:
  ColumnSubsetView(LinOpPtr parent, std::vector<int> indices);

  int rows() const override { return parent_->rows(); }
  int cols() const override { return static_cast<int>(indices_.size()); }

  void apply(const Vec& x, Vec& y) const override;
  void apply_transpose(const Vec& y, Vec& x) const override;

  std::shared_ptr<const LinearOperator> column_subset(std::vector<int> indices) const override;

  const std::vector<int>& indices() const { return indices_; }

 private:
  LinOpPtr parent_;
  std::vector<int> indices_;
};

// Symmetric operator defined by a matvec callback; used for Krylov solves
// on implicitly represented systems.
class FunctionOperator final : public LinearOperator {
 public:
  FunctionOperator(int dim, std::function<void(const Vec&, Vec&)> matvec)
      : dim_(dim), matvec_(std::move(matvec)) {}

  int rows() const override { return dim_; }
  int cols() const override { return dim_; }

  void apply(const Vec& x, Vec& y) const override { matvec_(x, y); }
  void apply_transpose(const Vec& y, Vec& x) const override { matvec_(y, x); }

 private:
  int dim_;
  std::function<void(const Vec&, Vec&)> matvec_;
};

// Power iteration on A^T A; converges to ||A||_2 from below. Deterministic
// (internally seeded). The estimate is diagnostic only.
double spectral_norm_estimate(const LinearOperator& op, int iters = 100);

// Materialize an operator densely (test / small-scale use).
DenseMatrix to_dense(const LinearOperator& op);

void validate_column_indices(const std::vector<int>& indices, int cols);

}  // namespace snipal

#endif  // SNIPAL_LINOP_HPP_
