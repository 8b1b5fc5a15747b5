#include "gon/polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gon {

namespace {

void guard_dimension(std::size_t dim) {
  if (dim == 0) throw std::domain_error("zero-dimensional polytope");
  if (dim > kMaxDimension) throw std::length_error("dimension guard exceeded (max " + std::to_string(kMaxDimension) + ")");
}

bool halfspace_less(const Halfspace& x, const Halfspace& y) {
  if (x.a != y.a) return lex_less(x.a, y.a);
  return x.b < y.b;
}

void sort_unique_points(std::vector<QVec>& pts) {
  std::sort(pts.begin(), pts.end(), [](const QVec& x, const QVec& y) { return lex_less(x, y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

void sort_unique_halfspaces(std::vector<Halfspace>& hs) {
  std::sort(hs.begin(), hs.end(), halfspace_less);
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
}

// Keeps only halfspaces whose tight vertices span a hyperplane.
std::vector<Halfspace> irredundant(const std::vector<Halfspace>& hs, const std::vector<QVec>& vertices, std::size_t dim) {
  std::vector<Halfspace> out;
  for (const auto& h : hs) {
    std::vector<QVec> tight;
    for (const auto& v : vertices)
      if (h.tight_at(v)) tight.push_back(v);
    if (affine_dimension(tight) == static_cast<int>(dim) - 1) out.push_back(h);
  }
  sort_unique_halfspaces(out);
  return out;
}

Rat abs_det_of_rows(const std::vector<QVec>& rows) { return abs(determinant(QMat::from_rows(rows))); }

void triangulate_face(const std::vector<std::size_t>& face, int face_dim, const std::vector<QVec>& vertices,
                      const std::vector<std::vector<std::size_t>>& incidences,
                      std::vector<std::vector<std::size_t>>& out) {
  if (face_dim == 0) {
    out.push_back({face.front()});
    return;
  }
  const std::size_t apex = face.front();
  std::set<std::vector<std::size_t>> subfaces;
  for (const auto& inc : incidences) {
    std::vector<std::size_t> g;
    std::set_intersection(face.begin(), face.end(), inc.begin(), inc.end(), std::back_inserter(g));
    if (g.empty() || std::binary_search(g.begin(), g.end(), apex)) continue;
    std::vector<QVec> pts;
    for (auto i : g) pts.push_back(vertices[i]);
    if (affine_dimension(pts) == face_dim - 1) subfaces.insert(std::move(g));
  }
  for (const auto& g : subfaces) {
    std::vector<std::vector<std::size_t>> sub;
    triangulate_face(g, face_dim - 1, vertices, incidences, sub);
    for (auto& s : sub) {
      s.insert(s.begin(), apex);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

Halfspace canonical(const Halfspace& h) {
  Int lcm_den = 1;
  for (const auto& x : h.a) lcm_den = lcm(lcm_den, x.get_den());
  Int g = 0;
  for (const auto& x : h.a) g = gcd(g, Rat(x * lcm_den).get_num());
  if (g == 0) throw std::domain_error("halfspace with zero normal");
  const Rat f = Rat(lcm_den) / Rat(g);
  Halfspace out{scaled(h.a, f), h.b * f};
  return out;
}

std::vector<QVec> vertex_enum(std::span<const Halfspace> constraints, std::size_t dim) {
  guard_dimension(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (int s : {1, -1}) {
      QVec obj(dim);
      obj[i] = s;
      const auto r = lp_exact(constraints, obj, Sense::maximize);
      if (r.status == LpStatus::infeasible) throw std::domain_error("vertex_enum: infeasible system");
      if (r.status == LpStatus::unbounded) throw std::domain_error("vertex_enum: unbounded polyhedron");
    }
  }
  std::vector<QVec> vertices;
  for_each_subset(constraints.size(), dim, [&](const std::vector<std::size_t>& idx) {
    QMat m(dim, dim);
    QVec rhs(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      m.set_row(r, constraints[idx[r]].a);
      rhs[r] = constraints[idx[r]].b;
    }
    if (determinant(m) == 0) return true;
    const auto x = solve(m, rhs);
    if (std::all_of(constraints.begin(), constraints.end(), [&](const Halfspace& h) { return h.satisfied_by(*x); }))
      vertices.push_back(*x);
    return true;
  });
  sort_unique_points(vertices);
  if (affine_dimension(vertices) != static_cast<int>(dim)) throw std::domain_error("vertex_enum: lower-dimensional polytope");
  return vertices;
}

std::vector<Halfspace> hull_facets(std::span<const QVec> points) {
  std::vector<QVec> pts(points.begin(), points.end());
  sort_unique_points(pts);
  if (pts.empty()) throw std::domain_error("hull of an empty point set");
  const std::size_t dim = pts.front().size();
  guard_dimension(dim);
  if (affine_dimension(pts) != static_cast<int>(dim)) throw std::domain_error("degenerate (lower-dimensional) hull");

  std::vector<Halfspace> facets;
  for_each_subset(pts.size(), dim, [&](const std::vector<std::size_t>& idx) {
    QMat diffs(dim - 1, dim);
    for (std::size_t r = 1; r < dim; ++r) diffs.set_row(r - 1, sub(pts[idx[r]], pts[idx[0]]));
    const auto ns = nullspace(diffs);
    if (ns.size() != 1) return true;
    const QVec& a = ns.front();
    const Rat b = dot(a, pts[idx[0]]);
    bool below = true, above = true;
    for (const auto& p : pts) {
      const Rat v = dot(a, p);
      if (v > b) below = false;
      if (v < b) above = false;
      if (!below && !above) return true;
    }
    facets.push_back(canonical(below ? Halfspace{a, b} : Halfspace{scaled(a, -1), -b}));
    return true;
  });
  sort_unique_halfspaces(facets);
  return facets;
}

Polytope Polytope::from_halfspaces(std::span<const Halfspace> constraints, std::size_t dim) {
  std::vector<Halfspace> hs;
  for (const auto& h : constraints) {
    if (h.a.size() != dim) throw std::invalid_argument("halfspace dimension mismatch");
    hs.push_back(canonical(h));
  }
  sort_unique_halfspaces(hs);
  Polytope p;
  p.dim = dim;
  p.vertices = vertex_enum(hs, dim);
  p.facets = irredundant(hs, p.vertices, dim);
  return p;
}

Polytope Polytope::from_points(std::span<const QVec> points) {
  Polytope p;
  p.facets = hull_facets(points);
  p.dim = p.facets.front().a.size();
  std::vector<QVec> pts(points.begin(), points.end());
  sort_unique_points(pts);
  for (const auto& x : pts) {
    std::vector<QVec> normals;
    for (const auto& h : p.facets)
      if (h.tight_at(x)) normals.push_back(h.a);
    if (rank_of(normals) == p.dim) p.vertices.push_back(x);
  }
  return p;
}

Polytope Polytope::from_both(std::vector<QVec> vertices, std::vector<Halfspace> facets) {
  Polytope p;
  p.dim = vertices.front().size();
  for (auto& h : facets) h = canonical(h);
  sort_unique_halfspaces(facets);
  sort_unique_points(vertices);
  p.vertices = std::move(vertices);
  p.facets = std::move(facets);
  return p;
}

std::vector<std::vector<std::size_t>> Polytope::incidences() const {
  std::vector<std::vector<std::size_t>> inc(facets.size());
  for (std::size_t j = 0; j < facets.size(); ++j)
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (facets[j].tight_at(vertices[i])) inc[j].push_back(i);
  return inc;
}

std::vector<std::vector<std::vector<std::size_t>>> facet_triangulations(const Polytope& p) {
  const auto inc = p.incidences();
  std::vector<std::vector<std::vector<std::size_t>>> out(p.facets.size());
  for (std::size_t j = 0; j < p.facets.size(); ++j)
    triangulate_face(inc[j], static_cast<int>(p.dim) - 1, p.vertices, inc, out[j]);
  return out;
}

VolumeCentroid volume_centroid(const Polytope& p) {
  const std::size_t n = p.dim;
  QVec apex(n);
  for (const auto& v : p.vertices)
    for (std::size_t i = 0; i < n; ++i) apex[i] += v[i];
  for (auto& x : apex) x /= static_cast<long>(p.vertices.size());

  const Rat nfact = Rat(factorial(static_cast<unsigned>(n)));
  Rat volume = 0;
  QVec moment(n);
  for (const auto& simplices : facet_triangulations(p)) {
    for (const auto& s : simplices) {
      std::vector<QVec> rows;
      for (auto i : s) rows.push_back(sub(p.vertices[i], apex));
      const Rat vol = abs_det_of_rows(rows) / nfact;
      volume += vol;
      // Simplex centroid = (apex + sum of facet-simplex vertices) / (n + 1).
      for (std::size_t k = 0; k < n; ++k) {
        Rat c = apex[k];
        for (auto i : s) c += p.vertices[i][k];
        moment[k] += vol * c / static_cast<long>(n + 1);
      }
    }
  }
  if (volume == 0) throw std::domain_error("degenerate polytope has zero volume");
  for (auto& x : moment) x /= volume;
  return {volume, moment};
}

VolumeCentroid volume_centroid(std::span<const QVec> points) { return volume_centroid(Polytope::from_points(points)); }

std::vector<Rat> facet_contents_squared(const Polytope& p) {
  const std::size_t n = p.dim;
  const Rat fact = Rat(factorial(static_cast<unsigned>(n - 1)));
  const auto tri = facet_triangulations(p);
  std::vector<Rat> out;
  out.reserve(p.facets.size());
  for (std::size_t j = 0; j < p.facets.size(); ++j) {
    const QVec& a = p.facets[j].a;
    Rat r = 0;
    for (const auto& s : tri[j]) {
      std::vector<QVec> rows;
      for (std::size_t k = 1; k < s.size(); ++k) rows.push_back(sub(p.vertices[s[k]], p.vertices[s[0]]));
      rows.push_back(a);
      r += abs_det_of_rows(rows);
    }
    r /= fact;
    out.push_back(r * r / dot(a, a));
  }
  return out;
}

}  // namespace gon
