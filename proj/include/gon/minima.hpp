#pragma once

// Lattice-point enumeration and successive minima.
//
// Enumeration encloses the body in an ellipsoid, LLL-reduces the lattice
// with respect to that ellipsoid and runs an exact Fincke-Pohst search over
// the reduced coordinates; every leaf is then filtered by the body's exact
// membership or gauge test.  Successive minima run one branch-and-bound per
// minimum over the cosets outside the span of the earlier witnesses, with
// exact LP bounds on the gauge to cut tied subtrees.

#include "gon/body.hpp"
#include "gon/lattice.hpp"

#include <functional>

namespace gon {

/// Calls f(coeffs, x) for every lattice point x = B coeffs with
/// (x - center)^T N (x - center) <= bound.  N must be positive definite on
/// the span of the lattice.
void enumerate_ellipsoid(const Lattice& l, const QMat& n, std::span<const Rat> center, const Rat& bound,
                         const std::function<void(const ZVec&, const QVec&)>& f);

struct GaugedPoint {
  ZVec coeffs;
  QVec point;
  QuadVal gauge;
};

/// All lattice points with gauge <= radius, including 0, sorted
/// lexicographically by coordinates.  K must have the origin in its interior.
std::vector<GaugedPoint> enumerate_points(const Body& k, const Lattice& l, const QuadVal& radius);

struct MinimaResult {
  std::vector<QuadVal> values;
  std::vector<QVec> witnesses;
  std::vector<ZVec> coefficients;
};

/// λ_1, ..., λ_count of a symmetric body (closed dilates).  The i-th
/// witness minimizes, over lattice points outside the span of the earlier
/// ones, the gauge, then x^T N x for the body's enclosing ellipsoid N, then
/// decreasing lexicographic order of the sign-normalized vector.  Rejects asymmetric
/// bodies (std::domain_error); use symmetrize first.
MinimaResult successive_minima(const Body& k, const Lattice& l, std::size_t count);

/// The same for a body that merely has the origin in its interior:
/// λ_i(K) = min{λ > 0 : dim(λK ∩ Λ) >= i}.
MinimaResult star_minima(const Body& k, const Lattice& l, std::size_t count);

struct FirstMinimum {
  QuadVal value;
  QVec witness;
};

FirstMinimum first_minimum(const Body& k, const Lattice& l);

struct LatticeWidth {
  QuadVal value;
  QVec direction;  ///< minimizing vector of the polar lattice
};

/// min over nonzero u in Λ* of the width of K in direction u, computed as
/// λ_1((K - K)°, Λ*).
LatticeWidth lattice_width(const Body& k, const Lattice& l);

struct JarnikBracket {
  QuadVal lower;  ///< λ_n(K - K, Λ)
  Value upper;    ///< Σ λ_i(K - K, Λ)
};

/// Bracket λ_n(K - K) <= μ(K, Λ) <= Σ λ_i(K - K) for the covering radius.
JarnikBracket jarnik_bracket(const Body& k, const Lattice& l);

}  // namespace gon
