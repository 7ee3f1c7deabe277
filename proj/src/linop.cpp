#include "snipal/linop.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "snipal/rng.hpp"

namespace snipal {

void validate_column_indices(const std::vector<int>& indices, int cols) {
  int prev = -1;
  for (int i : indices) {
    if (i < 0 || i >= cols) throw std::invalid_argument("column subset: index out of range");
    if (i <= prev) throw std::invalid_argument("column subset: indices must be strictly increasing");
    prev = i;
  }
}

std::shared_ptr<const LinearOperator> LinearOperator::column_subset(std::vector<int> indices) const {
  validate_column_indices(indices, cols());
  return std::make_shared<ColumnSubsetView>(shared_from_this(), std::move(indices));
}

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix::SparseMatrix(int rows, int cols, const std::vector<Triplet>& triplets)
    : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("SparseMatrix: negative dimension");
  std::vector<int> col_count(cols + 1, 0), row_count(rows + 1, 0);
  for (const Triplet& t : triplets) {
    if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
      throw std::invalid_argument("SparseMatrix: triplet out of range");
    ++col_count[t.col + 1];
    ++row_count[t.row + 1];
  }
  csc_start_.assign(cols + 1, 0);
  csr_start_.assign(rows + 1, 0);
  for (int j = 0; j < cols; ++j) csc_start_[j + 1] = csc_start_[j] + col_count[j + 1];
  for (int i = 0; i < rows; ++i) csr_start_[i + 1] = csr_start_[i] + row_count[i + 1];
  const std::size_t nz = triplets.size();
  csc_rows_.resize(nz);
  csc_values_.resize(nz);
  csr_cols_.resize(nz);
  csr_values_.resize(nz);
  std::vector<int> ccur(csc_start_.begin(), csc_start_.end() - 1);
  std::vector<int> rcur(csr_start_.begin(), csr_start_.end() - 1);
  for (const Triplet& t : triplets) {
    const int cpos = ccur[t.col]++;
    csc_rows_[cpos] = t.row;
    csc_values_[cpos] = t.value;
    const int rpos = rcur[t.row]++;
    csr_cols_[rpos] = t.col;
    csr_values_[rpos] = t.value;
  }
  // Sort entries within each column / row and reject duplicates.
  for (int j = 0; j < cols; ++j) {
    const int lo = csc_start_[j], hi = csc_start_[j + 1];
    std::vector<std::pair<int, double>> entries;
    entries.reserve(hi - lo);
    for (int k = lo; k < hi; ++k) entries.emplace_back(csc_rows_[k], csc_values_[k]);
    std::sort(entries.begin(), entries.end());
    for (int k = lo + 1; k < hi; ++k) {
      if (entries[k - lo].first == entries[k - lo - 1].first)
        throw std::invalid_argument("SparseMatrix: duplicate entry at (" +
                                    std::to_string(entries[k - lo].first) + ", " +
                                    std::to_string(j) + ")");
    }
    for (int k = lo; k < hi; ++k) {
      csc_rows_[k] = entries[k - lo].first;
      csc_values_[k] = entries[k - lo].second;
    }
  }
  for (int i = 0; i < rows; ++i) {
    const int lo = csr_start_[i], hi = csr_start_[i + 1];
    std::vector<std::pair<int, double>> entries;
    entries.reserve(hi - lo);
    for (int k = lo; k < hi; ++k) entries.emplace_back(csr_cols_[k], csr_values_[k]);
    std::sort(entries.begin(), entries.end());
    for (int k = lo; k < hi; ++k) {
      csr_cols_[k] = entries[k - lo].first;
      csr_values_[k] = entries[k - lo].second;
    }
  }
}

std::shared_ptr<SparseMatrix> SparseMatrix::from_dense(const DenseMatrix& dense) {
  std::vector<Triplet> ts;
  for (int i = 0; i < dense.rows(); ++i)
    for (int j = 0; j < dense.cols(); ++j)
      if (dense(i, j) != 0.0) ts.push_back({i, j, dense(i, j)});
  return std::make_shared<SparseMatrix>(dense.rows(), dense.cols(), ts);
}

void SparseMatrix::apply(const Vec& x, Vec& y) const {
  check_size(x, static_cast<std::size_t>(cols_), "SparseMatrix::apply");
  y.assign(rows_, 0.0);
  for (int i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (int k = csr_start_[i]; k < csr_start_[i + 1]; ++k) s += csr_values_[k] * x[csr_cols_[k]];
    y[i] = s;
  }
}

void SparseMatrix::apply_transpose(const Vec& y, Vec& x) const {
  check_size(y, static_cast<std::size_t>(rows_), "SparseMatrix::apply_transpose");
  x.assign(cols_, 0.0);
  for (int j = 0; j < cols_; ++j) {
    double s = 0.0;
    for (int k = csc_start_[j]; k < csc_start_[j + 1]; ++k) s += csc_values_[k] * y[csc_rows_[k]];
    x[j] = s;
  }
}

std::shared_ptr<const LinearOperator> SparseMatrix::column_subset(std::vector<int> indices) const {
  validate_column_indices(indices, cols_);
  std::vector<Triplet> ts;
  for (std::size_t jj = 0; jj < indices.size(); ++jj) {
    const int j = indices[jj];
    for (int k = csc_start_[j]; k < csc_start_[j + 1]; ++k) {
      ts.push_back({csc_rows_[k], static_cast<int>(jj), csc_values_[k]});
    }
  }
  return std::make_shared<SparseMatrix>(rows_, static_cast<int>(indices.size()), ts);
}

std::vector<Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> ts;
  ts.reserve(nnz());
  for (int j = 0; j < cols_; ++j)
    for (int k = csc_start_[j]; k < csc_start_[j + 1]; ++k)
      ts.push_back({csc_rows_[k], j, csc_values_[k]});
  return ts;
}

// ---------------------------------------------------------------------------
// KroneckerOperator

KroneckerOperator::KroneckerOperator(DenseMatrix d, DenseMatrix b)
    : d_(std::move(d)), b_(std::move(b)) {
  if (d_.rows() == 0 || d_.cols() == 0 || b_.rows() == 0 || b_.cols() == 0)
    throw std::invalid_argument("KroneckerOperator: empty factor");
}

void KroneckerOperator::apply(const Vec& x, Vec& y) const {
  check_size(x, static_cast<std::size_t>(cols()), "KroneckerOperator::apply");
  const int br = b_.rows(), bc = b_.cols(), dr = d_.rows(), dc = d_.cols();
  // X = mat(x) is bc x dc column-major; compute Y = B X D^T (br x dr).
  // T = B X (br x dc) first.
  std::vector<double> t(static_cast<std::size_t>(br) * dc, 0.0);
  for (int jc = 0; jc < dc; ++jc) {
    const double* xcol = &x[static_cast<std::size_t>(jc) * bc];
    double* tcol = &t[static_cast<std::size_t>(jc) * br];
    for (int i = 0; i < br; ++i) {
      double s = 0.0;
      for (int k = 0; k < bc; ++k) s += b_(i, k) * xcol[k];
      tcol[i] = s;
    }
  }
  y.assign(static_cast<std::size_t>(br) * dr, 0.0);
  for (int jd = 0; jd < dr; ++jd) {
    double* ycol = &y[static_cast<std::size_t>(jd) * br];
    for (int k = 0; k < dc; ++k) {
      const double djk = d_(jd, k);
      if (djk == 0.0) continue;
      const double* tcol = &t[static_cast<std::size_t>(k) * br];
      for (int i = 0; i < br; ++i) ycol[i] += djk * tcol[i];
    }
  }
}

void KroneckerOperator::apply_transpose(const Vec& y, Vec& x) const {
  check_size(y, static_cast<std::size_t>(rows()), "KroneckerOperator::apply_transpose");
  const int br = b_.rows(), bc = b_.cols(), dr = d_.rows(), dc = d_.cols();
  // (D (x) B)^T vec(Y) = vec(B^T Y D) with Y = mat(y) of size br x dr.
  std::vector<double> t(static_cast<std::size_t>(bc) * dr, 0.0);
  for (int jd = 0; jd < dr; ++jd) {
    const double* ycol = &y[static_cast<std::size_t>(jd) * br];
    double* tcol = &t[static_cast<std::size_t>(jd) * bc];
    for (int j = 0; j < bc; ++j) {
      double s = 0.0;
      for (int i = 0; i < br; ++i) s += b_(i, j) * ycol[i];
      tcol[j] = s;
    }
  }
  x.assign(static_cast<std::size_t>(bc) * dc, 0.0);
  for (int jc = 0; jc < dc; ++jc) {
    double* xcol = &x[static_cast<std::size_t>(jc) * bc];
    for (int k = 0; k < dr; ++k) {
      const double dkj = d_(k, jc);
      if (dkj == 0.0) continue;
      const double* tcol = &t[static_cast<std::size_t>(k) * bc];
      for (int j = 0; j < bc; ++j) xcol[j] += dkj * tcol[j];
    }
  }
}

// ---------------------------------------------------------------------------
// VStack / HStack

VStackOperator::VStackOperator(std::vector<LinOpPtr> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw std::invalid_argument("VStackOperator: no blocks");
  cols_ = blocks_[0]->cols();
  rows_ = 0;
  for (const auto& b : blocks_) {
    if (b->cols() != cols_) throw std::invalid_argument("VStackOperator: column mismatch");
    rows_ += b->rows();
  }
}

void VStackOperator::apply(const Vec& x, Vec& y) const {
  check_size(x, static_cast<std::size_t>(cols_), "VStackOperator::apply");
  y.resize(rows_);
  int offset = 0;
  for (const auto& b : blocks_) {
    Vec part = b->apply(x);
    std::copy(part.begin(), part.end(), y.begin() + offset);
    offset += b->rows();
  }
}

void VStackOperator::apply_transpose(const Vec& y, Vec& x) const {
  check_size(y, static_cast<std::size_t>(rows_), "VStackOperator::apply_transpose");
  x.assign(cols_, 0.0);
  int offset = 0;
  for (const auto& b : blocks_) {
    Vec slice(y.begin() + offset, y.begin() + offset + b->rows());
    Vec part = b->apply_transpose(slice);
    axpy(1.0, part, x);
    offset += b->rows();
  }
}

HStackOperator::HStackOperator(std::vector<LinOpPtr> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw std::invalid_argument("HStackOperator: no blocks");
  rows_ = blocks_[0]->rows();
  cols_ = 0;
  for (const auto& b : blocks_) {
    if (b->rows() != rows_) throw std::invalid_argument("HStackOperator: row mismatch");
    cols_ += b->cols();
  }
}

void HStackOperator::apply(const Vec& x, Vec& y) const {
  check_size(x, static_cast<std::size_t>(cols_), "HStackOperator::apply");
  y.assign(rows_, 0.0);
  int offset = 0;
  for (const auto& b : blocks_) {
    Vec slice(x.begin() + offset, x.begin() + offset + b->cols());
    Vec part = b->apply(slice);
    axpy(1.0, part, y);
    offset += b->cols();
  }
}

void HStackOperator::apply_transpose(const Vec& y, Vec& x) const {
  check_size(y, static_cast<std::size_t>(rows_), "HStackOperator::apply_transpose");
  x.resize(cols_);
  int offset = 0;
  for (const auto& b : blocks_) {
    Vec part = b->apply_transpose(y);
    std::copy(part.begin(), part.end(), x.begin() + offset);
    offset += b->cols();
  }
}

// ---------------------------------------------------------------------------
// ColumnSubsetView

ColumnSubsetView::ColumnSubsetView(LinOpPtr parent, std::vector<int> indices)
    : parent_(std::move(parent)), indices_(std::move(indices)) {
  validate_column_indices(indices_, parent_->cols());
}

void ColumnSubsetView::apply(const Vec& x, Vec& y) const {
  check_size(x, indices_.size(), "ColumnSubsetView::apply");
  Vec full(parent_->cols(), 0.0);
  for (std::size_t k = 0; k < indices_.size(); ++k) full[indices_[k]] = x[k];
  parent_->apply(full, y);
}

void ColumnSubsetView::apply_transpose(const Vec& y, Vec& x) const {
  Vec full = parent_->apply_transpose(y);
  x.resize(indices_.size());
  for (std::size_t k = 0; k < indices_.size(); ++k) x[k] = full[indices_[k]];
}

std::shared_ptr<const LinearOperator> ColumnSubsetView::column_subset(
    std::vector<int> indices) const {
  validate_column_indices(indices, cols());
  std::vector<int> composed;
  composed.reserve(indices.size());
  for (int i : indices) composed.push_back(indices_[i]);
  return std::make_shared<ColumnSubsetView>(parent_, std::move(composed));
}

// ---------------------------------------------------------------------------

double spectral_norm_estimate(const LinearOperator& op, int iters) {
  const int n = op.cols();
  if (n == 0 || op.rows() == 0) return 0.0;
  Rng rng(0x5eed5eedULL, 7);
  Vec v(n);
  for (double& x : v) x = rng.uniform(-1.0, 1.0);
  double nv = norm2(v);
  if (nv == 0.0) v[0] = nv = 1.0;
  scale(v, 1.0 / nv);
  double lambda = 0.0;
  for (int it = 0; it < iters; ++it) {
    Vec av = op.apply(v);
    Vec atav = op.apply_transpose(av);
    lambda = dot(v, atav);  // Rayleigh quotient for A^T A
    double na = norm2(atav);
    if (na == 0.0) return 0.0;
    scale(atav, 1.0 / na);
    v.swap(atav);
  }
  return std::sqrt(std::max(lambda, 0.0));
}

DenseMatrix to_dense(const LinearOperator& op) {
  DenseMatrix out(op.rows(), op.cols());
  Vec e(op.cols(), 0.0);
  for (int j = 0; j < op.cols(); ++j) {
    e[j] = 1.0;
    Vec col = op.apply(e);
    for (int i = 0; i < op.rows(); ++i) out(i, j) = col[i];
    e[j] = 0.0;
  }
  return out;
}

}  // namespace snipal
