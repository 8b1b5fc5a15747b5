#pragma once

#include "gon/matrix.hpp"
#include "gon/real.hpp"

#include <optional>
#include <span>

namespace gon {

/// The lattice B Z^m in R^n; columns of B are the basis vectors.
class Lattice {
 public:
  /// Throws std::domain_error when the columns are dependent.
  explicit Lattice(QMat basis);
  static Lattice integer(std::size_t n);

  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t rank() const { return basis_.cols(); }
  bool full_rank() const { return rank() == ambient_dim(); }
  const QMat& basis() const { return basis_; }
  /// det(B^T B).
  const Rat& gram_det() const { return gram_det_; }
  /// sqrt(det(B^T B)); rational for full-rank lattices.
  QuadVal det() const { return QuadVal::from_square(gram_det_); }
  QMat gram() const { return basis_.transpose() * basis_; }

  QVec point(std::span<const Int> coeffs) const;
  /// Coordinates of x with respect to the basis, when x lies in the span.
  std::optional<QVec> coordinates(std::span<const Rat> x) const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  QMat basis_;
  Rat gram_det_;
};

/// Polar lattice {y : <x, y> in Z for all x in L}; basis B^{-T}.
Lattice polar_lattice(const Lattice& l);

/// Saturated kernel lattice Z^n ∩ ker(A) of an integer m x n matrix of rank
/// m < n, with an HNF-canonical basis.
Lattice kernel_lattice(const QMat& a);

/// gcd of all maximal (m x m) minors of an integer matrix of rank m.
Int minors_gcd(const QMat& a);

bool contains(const Lattice& l, std::span<const Rat> x);

/// L' = T L (basis T B).
Lattice transformed(const QMat& t, const Lattice& l);

}  // namespace gon
