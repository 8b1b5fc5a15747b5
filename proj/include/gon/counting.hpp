#pragma once

#include "gon/body.hpp"
#include "gon/lattice.hpp"

namespace gon {

/// Lattice points of K (or of its interior), sorted lexicographically.
std::vector<QVec> lattice_points(const Body& k, const Lattice& l, bool interior = false);

/// #(K ∩ Λ), boundary included unless `interior`.
Int count_points(const Body& k, const Lattice& l, bool interior = false);

/// G(kP, Λ) = Σ_i coeffs[i] k^i.
struct EhrhartPoly {
  std::vector<Rat> coeffs;

  Rat evaluate(const Rat& k) const;
};

/// Ehrhart polynomial of a lattice polytope, interpolated through the
/// dilates k = 1, ..., n+1.  G_0 = 1, G_n = vol/det and the holdout count at
/// k = n+2 are asserted afterwards (std::logic_error on mismatch).  Throws
/// std::domain_error when a vertex is not a lattice point.
EhrhartPoly ehrhart(const Body& p, const Lattice& l);

/// G_{n-1}(P, Λ) = (1/2) Σ_F vol_{n-1}(F) / det(Λ ∩ lin F) from the facets,
/// without counting.  Same preconditions as ehrhart.
Rat ehrhart_codim1(const Body& p, const Lattice& l);

struct CountRatio {
  Rat dilation;
  Int count;
  Rat ratio;  ///< G(ρK, Λ) det(Λ) / vol(ρK)
};

std::vector<CountRatio> count_ratio_bounds(const Body& k, const Lattice& l, const std::vector<Rat>& dilations);

}  // namespace gon
