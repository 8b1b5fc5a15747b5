#pragma once

// Convex bodies: H- and V-polytopes, boxes, cross-polytopes, ellipsoids.
//
// Polytopal bodies always carry both descriptions (see Polytope).  Symmetry,
// centeredness and whether the origin is interior are computed at
// construction, never taken from the caller.

#include "gon/polytope.hpp"
#include "gon/real.hpp"

#include <optional>
#include <string>

namespace gon {

enum class BodyKind { hpoly, vpoly, box, cross, ellipsoid };

std::string to_string(BodyKind k);

/// K ⊆ {x : (x - center)^T N (x - center) <= rho2}.
struct EnclosingEllipsoid {
  QMat n;
  QVec center;
  Rat rho2;
};

class Body {
 public:
  static Body hpoly(const std::vector<Halfspace>& constraints, std::size_t dim);
  static Body vpoly(const std::vector<QVec>& points);
  /// Box [-a_1, a_1] x ... x [-a_n, a_n] with a_1 >= ... >= a_n > 0.
  static Body box(const QVec& a);
  static Body cube(std::size_t n, const Rat& scale = 1);
  /// scale * conv{±e_i}.
  static Body cross(std::size_t n, const Rat& scale = 1);
  /// {x : x^T Q x <= 1}, Q symmetric positive definite.
  static Body ellipsoid(const QMat& q);
  static Body from_polytope(Polytope p, BodyKind kind);

  BodyKind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  bool is_polytope() const { return kind_ != BodyKind::ellipsoid; }
  const Polytope& polytope() const;
  const QVec& box_sides() const { return box_; }
  const Rat& cross_scale() const { return cross_scale_; }
  const QMat& quadric() const { return q_; }

  bool is_symmetric() const { return symmetric_; }
  bool is_centered() const { return centered_; }
  bool has_origin_interior() const { return origin_interior_; }
  const QVec& centroid() const { return centroid_; }

  /// Exact volume of polytopes; nullopt for ellipsoids.
  const std::optional<Rat>& exact_volume() const { return volume_; }
  /// Volume as a Value: exact for polytopes, an enclosure for ellipsoids.
  Value volume() const;

  bool contains(std::span<const Rat> x) const;
  bool contains_interior(std::span<const Rat> x) const;

  /// Minkowski functional min{t >= 0 : x in tK}; needs the origin in the
  /// interior (std::domain_error otherwise).
  QuadVal gauge(std::span<const Rat> x) const;

  /// max_{x in K} <u, x> - min_{x in K} <u, x>.
  QuadVal width(std::span<const Rat> u) const;

  Body scaled(const Rat& t) const;
  /// T K for an invertible matrix T.
  Body transformed(const QMat& t) const;
  /// K + c (polytopes only).
  Body translated(std::span<const Rat> c) const;

  EnclosingEllipsoid enclosing_ellipsoid(bool about_origin) const;

  /// Same point set (polytopes by vertices, ellipsoids by quadric).
  bool same_set(const Body& other) const;

 private:
  Body() = default;
  void finish();

  BodyKind kind_ = BodyKind::hpoly;
  std::size_t dim_ = 0;
  std::optional<Polytope> poly_;
  QVec box_;
  Rat cross_scale_;
  QMat q_;
  bool symmetric_ = false;
  bool centered_ = false;
  bool origin_interior_ = false;
  QVec centroid_;
  std::optional<Rat> volume_;
};

/// T_n = -(e_1 + ... + e_n) + (n+1) conv{0, e_1, ..., e_n}.
Body centered_simplex(std::size_t n);
/// T_n^* = conv{-(e_1 + ... + e_n), e_1, ..., e_n}.
Body dual_centered_simplex(std::size_t n);
/// K_{α} = {x : ||x||_inf <= 1, |<α, x>| <= 1}.
Body generalized_hexagon(const QVec& alphas);

/// Polar body; requires the origin in the interior.
Body polar_body(const Body& k);
/// K_s = (K - K) / 2; symmetric bodies are returned unchanged.
Body symmetrize(const Body& k);
/// vol(K ∩ -K) / vol(K) for a centered polytope.
Rat alpha_ratio(const Body& k);
/// V_0, ..., V_n of the box with half side lengths a.
std::vector<Rat> intrinsic_volumes_box(const QVec& a);
/// Surface area enclosure of width <= 2^-bits.
Interval surface_area(const Body& k, unsigned bits = 40);

}  // namespace gon
