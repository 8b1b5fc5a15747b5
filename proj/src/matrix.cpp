#include "gon/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace gon {

QMat::QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

QMat::QMat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows) {
  if (rows.empty()) return {};
  QMat m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
    m.set_row(i, rows[i]);
  }
  return m;
}

QMat QMat::from_columns(const std::vector<QVec>& columns) {
  if (columns.empty()) return {};
  QMat m(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != m.rows_) throw std::invalid_argument("ragged columns");
    m.set_column(j, columns[j]);
  }
  return m;
}

QMat QMat::diagonal(std::span<const Rat> d) {
  QMat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

QVec QMat::row(std::size_t i) const {
  return QVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

QVec QMat::column(std::size_t j) const {
  QVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

void QMat::set_row(std::size_t i, std::span<const Rat> v) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void QMat::set_column(std::size_t j, std::span<const Rat> v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void QMat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void QMat::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

QMat QMat::transpose() const {
  QMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool QMat::is_integer() const {
  for (const auto& x : data_)
    if (!gon::is_integer(x)) return false;
  return true;
}

QMat operator*(const QMat& a, const QMat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  QMat c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

QVec operator*(const QMat& a, std::span<const Rat> x) {
  if (a.cols_ != x.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  QVec y(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
  return y;
}

std::string QMat::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) s += ", ";
    s += to_string(std::span<const Rat>(row(i)));
  }
  return s + "]";
}

namespace {

// Gauss-Jordan elimination in place; returns pivot columns.
std::vector<std::size_t> reduce_rows(QMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const Rat inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rat f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rat determinant(const QMat& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  QMat a = m;
  const std::size_t n = a.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Rat f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::size_t rank(const QMat& m) {
  QMat a = m;
  return reduce_rows(a).size();
}

QMat inverse(const QMat& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  QMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = reduce_rows(aug);
  if (pivots.size() < n || pivots.back() >= n) throw std::domain_error("singular matrix");
  QMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<QVec> solve(const QMat& m, std::span<const Rat> rhs) {
  const std::size_t n = m.cols();
  QMat aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = rhs[i];
  }
  const auto pivots = reduce_rows(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  QVec x(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, n);
  return x;
}

std::vector<QVec> nullspace(const QMat& m) {
  QMat a = m;
  const auto pivots = reduce_rows(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVec v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_of(const std::vector<QVec>& vectors) {
  if (vectors.empty()) return 0;
  return rank(QMat::from_rows(vectors));
}

int affine_dimension(const std::vector<QVec>& points) {
  if (points.empty()) return -1;
  std::vector<QVec> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  return static_cast<int>(rank_of(diffs));
}

bool IndependenceTracker::try_add(std::span<const Rat> v) {
  QVec w(v.begin(), v.end());
  if (w.size() != dim_) throw std::invalid_argument("dimension mismatch in independence test");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Rat f = w[pivots_[k]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) w[j] -= f * basis_[k][j];
  }
  std::size_t p = 0;
  while (p < dim_ && w[p] == 0) ++p;
  if (p == dim_) return false;
  const Rat inv = 1 / w[p];
  for (auto& x : w) x *= inv;
  // Keep the stored rows reduced at every pivot.
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Rat f = basis_[k][p];
    if (f == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) basis_[k][j] -= f * w[j];
  }
  basis_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

}  // namespace gon
