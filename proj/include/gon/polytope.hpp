#pragma once

// Exact polytope kernels: H <-> V conversion by brute force over facet and
// point subsets, triangulated volume and centroid, facet contents.  All of
// them are exponential in the dimension and guarded at kMaxDimension.

#include "gon/lp.hpp"
#include "gon/matrix.hpp"

#include <vector>

namespace gon {

inline constexpr std::size_t kMaxDimension = 6;

/// Scales a halfspace so that `a` is a primitive integer vector.
Halfspace canonical(const Halfspace& h);

/// Vertices of the bounded, full-dimensional polytope {x : <a_i, x> <= b_i},
/// sorted lexicographically.  Throws std::domain_error if the system is
/// infeasible, unbounded or lower dimensional, and std::length_error past
/// the dimension guard.
std::vector<QVec> vertex_enum(std::span<const Halfspace> constraints, std::size_t dim);

/// Facets (canonical, sorted) of the convex hull of a full-dimensional point
/// set.  Throws std::domain_error for a degenerate hull.
std::vector<Halfspace> hull_facets(std::span<const QVec> points);

/// Polytope with both descriptions kept irredundant and canonically ordered.
struct Polytope {
  std::size_t dim = 0;
  std::vector<QVec> vertices;
  std::vector<Halfspace> facets;

  static Polytope from_halfspaces(std::span<const Halfspace> constraints, std::size_t dim);
  static Polytope from_points(std::span<const QVec> points);
  /// Trusted constructor for descriptions known to be irredundant (images
  /// under invertible maps, polars); only canonicalizes and sorts.
  static Polytope from_both(std::vector<QVec> vertices, std::vector<Halfspace> facets);

  /// Vertex indices lying on each facet.
  std::vector<std::vector<std::size_t>> incidences() const;
};

struct VolumeCentroid {
  Rat volume;
  QVec centroid;
};

/// Boundary triangulation of each facet: for facet j, a list of
/// (dim-1)-simplices given by vertex indices.  Faces are triangulated by
/// pulling their lowest-index vertex.
std::vector<std::vector<std::vector<std::size_t>>> facet_triangulations(const Polytope& p);

/// Exact volume and centroid from the fan over the boundary triangulation
/// with apex at the vertex average.
VolumeCentroid volume_centroid(const Polytope& p);
VolumeCentroid volume_centroid(std::span<const QVec> points);

/// Squared (dim-1)-dimensional content of every facet, in facet order.
std::vector<Rat> facet_contents_squared(const Polytope& p);

/// Calls f(indices) for every k-subset of {0, ..., n-1} in lexicographic
/// order; stops early when f returns false.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (!f(static_cast<const std::vector<std::size_t>&>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace gon
