#include "gon/lattice.hpp"

#include "gon/normal_form.hpp"

#include <stdexcept>

namespace gon {

Lattice::Lattice(QMat basis) : basis_(std::move(basis)) {
  if (basis_.cols() == 0 || basis_.cols() > basis_.rows()) throw std::domain_error("lattice basis must have 1..n columns");
  gram_det_ = determinant(basis_.transpose() * basis_);
  if (gram_det_ == 0) throw std::domain_error("lattice basis columns are linearly dependent");
}

Lattice Lattice::integer(std::size_t n) { return Lattice(QMat::identity(n)); }

QVec Lattice::point(std::span<const Int> coeffs) const {
  if (coeffs.size() != rank()) throw std::invalid_argument("coefficient vector has wrong length");
  QVec x(ambient_dim());
  for (std::size_t i = 0; i < ambient_dim(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      if (coeffs[j] != 0) x[i] += basis_(i, j) * coeffs[j];
  return x;
}

std::optional<QVec> Lattice::coordinates(std::span<const Rat> x) const {
  if (x.size() != ambient_dim()) throw std::invalid_argument("point has wrong dimension");
  return solve(basis_, x);
}

Lattice polar_lattice(const Lattice& l) {
  if (!l.full_rank()) throw std::domain_error("polar lattice requires a full-rank lattice");
  return Lattice(inverse(l.basis()).transpose());
}

Lattice kernel_lattice(const QMat& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m >= n) throw std::domain_error("kernel lattice needs fewer rows than columns");
  if (rank(a) != m) throw std::domain_error("kernel lattice needs a matrix of full row rank");
  // Rows of U that annihilate A^T span the saturated kernel, U being unimodular.
  const auto f = hnf(a.transpose());
  std::vector<QVec> kernel;
  for (std::size_t i = m; i < n; ++i) kernel.push_back(f.u.row(i));
  const auto canon = hnf(QMat::from_rows(kernel));
  std::vector<QVec> columns;
  for (std::size_t i = 0; i < n - m; ++i) columns.push_back(canon.h.row(i));
  return Lattice(QMat::from_columns(columns));
}

Int minors_gcd(const QMat& a) {
  if (rank(a) != a.rows()) throw std::domain_error("minors_gcd needs a matrix of full row rank");
  Int g = 1;
  for (const auto& d : invariant_factors(a)) g *= d;
  return g;
}

bool contains(const Lattice& l, std::span<const Rat> x) {
  const auto y = l.coordinates(x);
  if (!y) return false;
  for (const auto& c : *y)
    if (!is_integer(c)) return false;
  return true;
}

Lattice transformed(const QMat& t, const Lattice& l) { return Lattice(t * l.basis()); }

}  // namespace gon
