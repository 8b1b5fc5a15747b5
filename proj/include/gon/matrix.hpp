#pragma once

#include "gon/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gon {

/// Dense row-major rational matrix.
class QMat {
 public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols);
  QMat(std::initializer_list<std::initializer_list<long>> rows);

  static QMat identity(std::size_t n);
  static QMat from_rows(const std::vector<QVec>& rows);
  static QMat from_columns(const std::vector<QVec>& columns);
  static QMat diagonal(std::span<const Rat> d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QVec row(std::size_t i) const;
  QVec column(std::size_t j) const;
  void set_row(std::size_t i, std::span<const Rat> v);
  void set_column(std::size_t j, std::span<const Rat> v);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);

  QMat transpose() const;
  bool is_integer() const;
  bool is_square() const { return rows_ == cols_; }

  friend QMat operator*(const QMat& a, const QMat& b);
  friend QVec operator*(const QMat& a, std::span<const Rat> x);
  friend bool operator==(const QMat& a, const QMat& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

Rat determinant(const QMat& m);
std::size_t rank(const QMat& m);
/// Throws std::domain_error for singular input.
QMat inverse(const QMat& m);
/// Some solution of M x = rhs, or nullopt if the system is inconsistent.
std::optional<QVec> solve(const QMat& m, std::span<const Rat> rhs);
/// Basis (as rows) of the right nullspace {x : M x = 0}.
std::vector<QVec> nullspace(const QMat& m);
/// Rank of a list of vectors.
std::size_t rank_of(const std::vector<QVec>& vectors);
/// Affine rank (dimension of the affine hull) of a point set; -1 if empty.
int affine_dimension(const std::vector<QVec>& points);

/// Incremental test for linear independence; keeps a reduced echelon basis.
class IndependenceTracker {
 public:
  explicit IndependenceTracker(std::size_t dim) : dim_(dim) {}
  /// Adds v when it is independent of the vectors seen so far.
  bool try_add(std::span<const Rat> v);
  std::size_t size() const { return basis_.size(); }

 private:
  std::size_t dim_;
  std::vector<QVec> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace gon
