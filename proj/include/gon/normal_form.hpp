#pragma once

// Integer normal forms by naive elimination over full-size integers.

#include "gon/matrix.hpp"

namespace gon {

struct HermiteForm {
  QMat h;  ///< row Hermite normal form
  QMat u;  ///< unimodular, h = u * m
};

/// Row-style HNF: nonzero rows first, positive pivots, entries above each
/// pivot reduced into [0, pivot).  Throws for non-integer or zero input.
HermiteForm hnf(const QMat& m);

struct SmithForm {
  QMat d;  ///< diagonal, d_1 | d_2 | ..., nonnegative
  QMat u;  ///< unimodular, d = u * m * v
  QMat v;  ///< unimodular
};

SmithForm snf(const QMat& m);

/// Invariant factors d_1, ..., d_r (the nonzero diagonal of the SNF).
std::vector<Int> invariant_factors(const QMat& m);

/// LLL reduction (delta = 3/4) of the lattice whose Gram matrix is `gram`
/// (positive definite).  Returns unimodular U; the reduced Gram matrix is
/// U^T * gram * U.
QMat lll_gram(const QMat& gram);

/// Nearest integer, ties rounded up.
Int round_nearest(const Rat& x);

}  // namespace gon
