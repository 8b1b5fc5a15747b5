#include "gon/counting.hpp"

#include "gon/minima.hpp"

#include <algorithm>
#include <stdexcept>

namespace gon {

std::vector<QVec> lattice_points(const Body& k, const Lattice& l, bool interior) {
  if (k.dim() != l.ambient_dim()) throw std::invalid_argument("body and lattice dimensions differ");
  const auto e = k.enclosing_ellipsoid(false);
  std::vector<QVec> out;
  enumerate_ellipsoid(l, e.n, e.center, e.rho2, [&](const ZVec&, const QVec& x) {
    if (interior ? k.contains_interior(x) : k.contains(x)) out.push_back(x);
  });
  std::sort(out.begin(), out.end(), [](const QVec& a, const QVec& b) { return lex_less(a, b); });
  return out;
}

Int count_points(const Body& k, const Lattice& l, bool interior) {
  return Int(static_cast<unsigned long>(lattice_points(k, l, interior).size()));
}

Rat EhrhartPoly::evaluate(const Rat& k) const {
  Rat v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * k + coeffs[i];
  return v;
}

EhrhartPoly ehrhart(const Body& p, const Lattice& l) {
  if (!p.is_polytope()) throw std::domain_error("Ehrhart polynomials need a polytope");
  if (!l.full_rank()) throw std::domain_error("Ehrhart polynomials need a full-rank lattice");
  for (const auto& v : p.polytope().vertices)
    if (!contains(l, v)) throw std::domain_error("not a lattice polytope: vertex " + to_string(v) + " is off the lattice");

  const std::size_t n = p.dim();
  QMat vandermonde(n + 1, n + 1);
  QVec counts(n + 1);
  for (std::size_t r = 0; r <= n; ++r) {
    const long k = static_cast<long>(r) + 1;
    for (std::size_t c = 0; c <= n; ++c) vandermonde(r, c) = pow(Rat(k), static_cast<unsigned>(c));
    counts[r] = Rat(count_points(p.scaled(k), l));
  }
  EhrhartPoly poly{*solve(vandermonde, counts)};

  if (poly.coeffs.front() != 1) throw std::logic_error("Ehrhart constant term is not 1");
  if (poly.coeffs.back() != *p.exact_volume() / *l.det().rational())
    throw std::logic_error("Ehrhart leading coefficient differs from vol/det");
  const long holdout = static_cast<long>(n) + 2;
  if (poly.evaluate(holdout) != Rat(count_points(p.scaled(holdout), l)))
    throw std::logic_error("Ehrhart holdout evaluation disagrees with the direct count");
  return poly;
}

Rat ehrhart_codim1(const Body& p, const Lattice& l) {
  if (!p.is_polytope() || !l.full_rank()) throw std::domain_error("need a polytope and a full-rank lattice");
  for (const auto& v : p.polytope().vertices)
    if (!contains(l, v)) throw std::domain_error("not a lattice polytope: vertex " + to_string(v) + " is off the lattice");
  const QMat bt = l.basis().transpose();
  const QMat gram_inv = inverse(l.gram());
  const auto contents = facet_contents_squared(p.polytope());
  Rat sum = 0;
  for (std::size_t f = 0; f < contents.size(); ++f) {
    // Primitive vector u of the polar lattice normal to F, in dual coordinates.
    QVec c = bt * p.polytope().facets[f].a;
    Int den = 1;
    for (const auto& x : c) den = lcm(den, Int(x.get_den()));
    ZVec z(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) z[i] = Int(c[i] * den);
    const Int g = gcd_all(z);
    const QVec prim = scaled(to_qvec(z), Rat(1) / Rat(g));
    const Rat u2 = dot(prim, gram_inv * prim);
    // det(Λ ∩ u^⊥) = det(Λ) ||u||.
    const auto rel = exact_sqrt(contents[f] / (l.gram_det() * u2));
    if (!rel) throw std::logic_error("relative facet volume is not rational");
    sum += *rel;
  }
  return sum / 2;
}

std::vector<CountRatio> count_ratio_bounds(const Body& k, const Lattice& l, const std::vector<Rat>& dilations) {
  if (!k.exact_volume()) throw std::domain_error("count ratios need an exact volume");
  if (!l.full_rank()) throw std::domain_error("count ratios need a full-rank lattice");
  std::vector<CountRatio> out;
  for (const auto& rho : dilations) {
    const Body kr = k.scaled(rho);
    const Int c = count_points(kr, l);
    out.push_back({rho, c, Rat(c) * *l.det().rational() / *kr.exact_volume()});
  }
  return out;
}

}  // namespace gon
