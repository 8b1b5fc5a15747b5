#include "gon/body.hpp"

#include <algorithm>
#include <stdexcept>

namespace gon {

namespace {

Rat quad_form(const QMat& q, std::span<const Rat> x) { return dot(x, q * x); }

bool positive_definite(const QMat& q) {
  if (!q.is_square()) return false;
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (q(i, j) != q(j, i)) return false;
  // Sylvester's criterion on leading principal minors.
  for (std::size_t k = 1; k <= q.rows(); ++k) {
    QMat lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = q(i, j);
    if (determinant(lead) <= 0) return false;
  }
  return true;
}

std::vector<Halfspace> cube_constraints(const QVec& a) {
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int s : {1, -1}) {
      QVec row(a.size());
      row[i] = s;
      hs.push_back({row, a[i]});
    }
  return hs;
}

bool sorted_contains(const std::vector<QVec>& sorted, const QVec& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x, [](const QVec& a, const QVec& b) { return lex_less(a, b); });
}

}  // namespace

std::string to_string(BodyKind k) {
  switch (k) {
    case BodyKind::hpoly: return "hpoly";
    case BodyKind::vpoly: return "vpoly";
    case BodyKind::box: return "box";
    case BodyKind::cross: return "cross";
    case BodyKind::ellipsoid: return "ellipsoid";
  }
  return "unknown";
}

Body Body::hpoly(const std::vector<Halfspace>& constraints, std::size_t dim) {
  Body b;
  b.kind_ = BodyKind::hpoly;
  b.poly_ = Polytope::from_halfspaces(constraints, dim);
  b.finish();
  return b;
}

Body Body::vpoly(const std::vector<QVec>& points) {
  Body b;
  b.kind_ = BodyKind::vpoly;
  b.poly_ = Polytope::from_points(points);
  b.finish();
  return b;
}

Body Body::box(const QVec& a) {
  if (a.empty()) throw std::invalid_argument("box needs at least one side");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0) throw std::invalid_argument("box sides must be positive");
    if (i > 0 && a[i] > a[i - 1]) throw std::invalid_argument("box sides must be non-increasing");
  }
  Body b;
  b.kind_ = BodyKind::box;
  b.box_ = a;
  b.poly_ = Polytope::from_halfspaces(cube_constraints(a), a.size());
  b.finish();
  return b;
}

Body Body::cube(std::size_t n, const Rat& scale) { return box(QVec(n, scale)); }

Body Body::cross(std::size_t n, const Rat& scale) {
  if (scale <= 0) throw std::invalid_argument("cross-polytope scale must be positive");
  std::vector<QVec> pts;
  for (std::size_t i = 0; i < n; ++i)
    for (int s : {1, -1}) {
      QVec x(n);
      x[i] = scale * s;
      pts.push_back(x);
    }
  Body b;
  b.kind_ = BodyKind::cross;
  b.cross_scale_ = scale;
  b.poly_ = Polytope::from_points(pts);
  b.finish();
  return b;
}

Body Body::ellipsoid(const QMat& q) {
  if (!positive_definite(q)) throw std::invalid_argument("ellipsoid matrix must be symmetric positive definite");
  if (q.rows() > kMaxDimension) throw std::length_error("dimension guard exceeded");
  Body b;
  b.kind_ = BodyKind::ellipsoid;
  b.q_ = q;
  b.finish();
  return b;
}

Body Body::from_polytope(Polytope p, BodyKind kind) {
  if (kind == BodyKind::ellipsoid || kind == BodyKind::box || kind == BodyKind::cross)
    throw std::invalid_argument("from_polytope builds hpoly or vpoly bodies");
  Body b;
  b.kind_ = kind;
  b.poly_ = std::move(p);
  b.finish();
  return b;
}

void Body::finish() {
  if (kind_ == BodyKind::ellipsoid) {
    dim_ = q_.rows();
    symmetric_ = centered_ = origin_interior_ = true;
    centroid_ = QVec(dim_);
    return;
  }
  const Polytope& p = *poly_;
  dim_ = p.dim;
  const auto vc = volume_centroid(p);
  volume_ = vc.volume;
  centroid_ = vc.centroid;
  centered_ = is_zero(centroid_);
  origin_interior_ = std::all_of(p.facets.begin(), p.facets.end(), [](const Halfspace& h) { return h.b > 0; });
  symmetric_ = std::all_of(p.vertices.begin(), p.vertices.end(),
                           [&](const QVec& v) { return sorted_contains(p.vertices, gon::scaled(v, -1)); });
}

const Polytope& Body::polytope() const {
  if (!poly_) throw std::domain_error("ellipsoid has no polytope description");
  return *poly_;
}

Value Body::volume() const {
  if (volume_) return *volume_;
  const unsigned bits = working_precision() + 8;
  return unit_ball_volume(static_cast<unsigned>(dim_), bits) / sqrt_enclosure(determinant(q_), bits);
}

bool Body::contains(std::span<const Rat> x) const {
  if (kind_ == BodyKind::ellipsoid) return quad_form(q_, x) <= 1;
  return std::all_of(poly_->facets.begin(), poly_->facets.end(), [&](const Halfspace& h) { return h.satisfied_by(x); });
}

bool Body::contains_interior(std::span<const Rat> x) const {
  if (kind_ == BodyKind::ellipsoid) return quad_form(q_, x) < 1;
  return std::all_of(poly_->facets.begin(), poly_->facets.end(), [&](const Halfspace& h) { return dot(h.a, x) < h.b; });
}

QuadVal Body::gauge(std::span<const Rat> x) const {
  if (!origin_interior_) throw std::domain_error("gauge needs the origin in the interior");
  switch (kind_) {
    case BodyKind::ellipsoid: return QuadVal::from_square(quad_form(q_, x));
    case BodyKind::box: {
      Rat g = 0;
      for (std::size_t i = 0; i < dim_; ++i) g = std::max(g, Rat(abs(x[i]) / box_[i]));
      return QuadVal::from_rational(g);
    }
    case BodyKind::cross: {
      Rat g = 0;
      for (const auto& c : x) g += abs(c);
      return QuadVal::from_rational(g / cross_scale_);
    }
    default: {
      Rat g = 0;
      for (const auto& h : poly_->facets) g = std::max(g, Rat(dot(h.a, x) / h.b));
      return QuadVal::from_rational(g);
    }
  }
}

QuadVal Body::width(std::span<const Rat> u) const {
  if (kind_ == BodyKind::ellipsoid) return QuadVal::from_square(4 * quad_form(inverse(q_), u));
  Rat lo = dot(u, poly_->vertices.front()), hi = lo;
  for (const auto& v : poly_->vertices) {
    const Rat s = dot(u, v);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return QuadVal::from_rational(hi - lo);
}

Body Body::scaled(const Rat& t) const {
  if (t <= 0) throw std::invalid_argument("dilation factor must be positive");
  switch (kind_) {
    case BodyKind::ellipsoid: {
      QMat q = q_;
      for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) q(i, j) /= t * t;
      return ellipsoid(q);
    }
    case BodyKind::box: return box(gon::scaled(box_, t));
    case BodyKind::cross: return cross(dim_, cross_scale_ * t);
    default: {
      std::vector<QVec> vs;
      for (const auto& v : poly_->vertices) vs.push_back(gon::scaled(v, t));
      std::vector<Halfspace> fs;
      for (const auto& h : poly_->facets) fs.push_back({h.a, h.b * t});
      return from_polytope(Polytope::from_both(std::move(vs), std::move(fs)), kind_);
    }
  }
}

Body Body::transformed(const QMat& t) const {
  const QMat tinv = inverse(t);
  if (kind_ == BodyKind::ellipsoid) return ellipsoid(tinv.transpose() * q_ * tinv);
  std::vector<QVec> vs;
  for (const auto& v : poly_->vertices) vs.push_back(t * v);
  const QMat tinv_t = tinv.transpose();
  std::vector<Halfspace> fs;
  for (const auto& h : poly_->facets) fs.push_back({tinv_t * h.a, h.b});
  const BodyKind k = kind_ == BodyKind::vpoly || kind_ == BodyKind::cross ? BodyKind::vpoly : BodyKind::hpoly;
  return from_polytope(Polytope::from_both(std::move(vs), std::move(fs)), k);
}

Body Body::translated(std::span<const Rat> c) const {
  if (kind_ == BodyKind::ellipsoid) throw std::domain_error("translated ellipsoids are not representable");
  std::vector<QVec> vs;
  for (const auto& v : poly_->vertices) vs.push_back(add(v, c));
  std::vector<Halfspace> fs;
  for (const auto& h : poly_->facets) fs.push_back({h.a, h.b + dot(h.a, c)});
  const BodyKind k = kind_ == BodyKind::vpoly || kind_ == BodyKind::cross ? BodyKind::vpoly : BodyKind::hpoly;
  return from_polytope(Polytope::from_both(std::move(vs), std::move(fs)), k);
}

EnclosingEllipsoid Body::enclosing_ellipsoid(bool about_origin) const {
  if (kind_ == BodyKind::ellipsoid) return {q_, QVec(dim_), 1};
  const auto& vs = poly_->vertices;
  QVec c(dim_);
  if (!about_origin) {
    for (const auto& v : vs) c = add(c, v);
    c = gon::scaled(c, make_rat(1, static_cast<long>(vs.size())));
  }
  QMat m(dim_, dim_);
  for (const auto& v : vs) {
    const QVec d = sub(v, c);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) m(i, j) += d[i] * d[j];
  }
  const QMat n = inverse(m);
  Rat rho2 = 0;
  for (const auto& v : vs) rho2 = std::max(rho2, quad_form(n, sub(v, c)));
  return {n, c, rho2};
}

bool Body::same_set(const Body& other) const {
  if (dim_ != other.dim_) return false;
  if (is_polytope() != other.is_polytope()) return false;
  if (!is_polytope()) return q_ == other.q_;
  return poly_->vertices == other.poly_->vertices;
}

Body centered_simplex(std::size_t n) {
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < n; ++i) {
    QVec a(n);
    a[i] = -1;
    hs.push_back({a, 1});
  }
  hs.push_back({QVec(n, Rat(1)), 1});
  return Body::hpoly(hs, n);
}

Body dual_centered_simplex(std::size_t n) {
  std::vector<QVec> pts{QVec(n, Rat(-1))};
  for (std::size_t i = 0; i < n; ++i) {
    QVec e(n);
    e[i] = 1;
    pts.push_back(e);
  }
  return Body::vpoly(pts);
}

Body generalized_hexagon(const QVec& alphas) {
  if (alphas.empty()) throw std::invalid_argument("generalized hexagon needs at least one coefficient");
  std::vector<Halfspace> hs = cube_constraints(QVec(alphas.size(), Rat(1)));
  hs.push_back({alphas, 1});
  hs.push_back({scaled(alphas, -1), 1});
  return Body::hpoly(hs, alphas.size());
}

Body polar_body(const Body& k) {
  if (!k.has_origin_interior()) throw std::domain_error("polar body needs the origin in the interior");
  if (k.kind() == BodyKind::ellipsoid) return Body::ellipsoid(inverse(k.quadric()));
  if (k.kind() == BodyKind::cross) return Body::cube(k.dim(), 1 / k.cross_scale());
  if (k.kind() == BodyKind::box) {
    const QVec& a = k.box_sides();
    if (std::all_of(a.begin(), a.end(), [&](const Rat& x) { return x == a.front(); }))
      return Body::cross(k.dim(), 1 / a.front());
  }
  const Polytope& p = k.polytope();
  std::vector<QVec> vs;
  for (const auto& h : p.facets) vs.push_back(scaled(h.a, 1 / h.b));
  std::vector<Halfspace> fs;
  for (const auto& v : p.vertices) fs.push_back({v, 1});
  const BodyKind kind = k.kind() == BodyKind::vpoly ? BodyKind::hpoly : BodyKind::vpoly;
  return Body::from_polytope(Polytope::from_both(std::move(vs), std::move(fs)), kind);
}

Body symmetrize(const Body& k) {
  if (k.is_symmetric()) return k;
  const auto& vs = k.polytope().vertices;
  std::vector<QVec> pts;
  for (const auto& v : vs)
    for (const auto& w : vs) pts.push_back(scaled(sub(v, w), Rat(1, 2)));
  return Body::vpoly(pts);
}

Rat alpha_ratio(const Body& k) {
  if (!k.is_polytope()) throw std::domain_error("alpha_ratio needs a polytope");
  if (!k.is_centered()) throw std::domain_error("alpha_ratio needs a centered body");
  if (k.is_symmetric()) return 1;
  std::vector<Halfspace> hs = k.polytope().facets;
  for (const auto& h : k.polytope().facets) hs.push_back({scaled(h.a, -1), h.b});
  const auto inter = Polytope::from_halfspaces(hs, k.dim());
  return volume_centroid(inter).volume / *k.exact_volume();
}

std::vector<Rat> intrinsic_volumes_box(const QVec& a) {
  // Elementary symmetric functions of the side lengths 2 a_i.
  std::vector<Rat> e(a.size() + 1);
  e[0] = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0) throw std::invalid_argument("box sides must be positive");
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * 2 * a[i];
  }
  return e;
}

Interval surface_area(const Body& k, unsigned bits) {
  if (!k.is_polytope()) throw std::domain_error("surface area is implemented for polytopes only");
  const auto contents = facet_contents_squared(k.polytope());
  unsigned extra = 1;
  while ((std::size_t{1} << extra) < contents.size()) ++extra;
  Interval total = Interval::point(0);
  for (const auto& c : contents) total = total + sqrt_enclosure(c, bits + extra);
  return total;
}

}  // namespace gon
