#include "gon/minima.hpp"

#include "gon/normal_form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gon {

namespace {

// Integers k with (k - c)^2 <= u, as the closed range [lo, hi] (lo > hi
// when empty).  A floating estimate is corrected by exact tests.
std::pair<Int, Int> integer_range(const Rat& c, const Rat& u) {
  auto ok = [&](const Int& k) {
    const Rat d = Rat(k) - c;
    return d * d <= u;
  };
  const double s = std::sqrt(u.get_d());
  const double cd = c.get_d();
  Int lo(std::ceil(cd - s));
  Int hi(std::floor(cd + s));
  while (ok(lo - 1)) --lo;
  while (!ok(lo) && Rat(lo) < c) ++lo;
  while (ok(hi + 1)) ++hi;
  while (!ok(hi) && Rat(hi) > c) --hi;
  if (!ok(lo) || !ok(hi)) return {Int(1), Int(0)};
  return {lo, hi};
}

bool first_nonzero_positive(const QVec& x) {
  for (const auto& c : x)
    if (c != 0) return c > 0;
  return false;
}

std::vector<QVec> reduced_basis(const Body& k, const Lattice& l) {
  const auto e = k.enclosing_ellipsoid(true);
  const QMat& b = l.basis();
  const QMat u = lll_gram(b.transpose() * e.n * b);
  const QMat reduced = b * u;
  std::vector<QVec> out;
  for (std::size_t j = 0; j < reduced.cols(); ++j) out.push_back(reduced.column(j));
  return out;
}

// Witness order: gauge, then the enclosing-ellipsoid norm q, then
// lexicographically largest.  Ties in the gauge are pruned through q.
struct Candidate {
  QuadVal gauge;
  Rat q;
  ZVec coeffs;
  QVec point;
  bool found = false;
};

bool better(const QuadVal& g, const Rat& q, const QVec& x, const Candidate& best) {
  if (!best.found) return g <= best.gauge;
  if (g != best.gauge) return g < best.gauge;
  if (q != best.q) return q < best.q;
  return lex_less(best.point, x);
}

// Unimodular U whose first k columns span Q(C) ∩ Z^m, where the columns of
// C are independent integer vectors.
QMat saturating_basis(const std::vector<ZVec>& cs, std::size_t m) {
  if (cs.empty()) return QMat::identity(m);
  QMat c(m, cs.size());
  for (std::size_t j = 0; j < cs.size(); ++j)
    for (std::size_t i = 0; i < m; ++i) c(i, j) = Rat(cs[j][i]);
  return inverse(snf(c).u);
}

// The lexicographically smallest-ordered point of Λ outside span(found)
// with gauge <= cap.
class StageSearch {
 public:
  StageSearch(const Body& k, const Lattice& l, const std::vector<ZVec>& found, const QuadVal& cap, bool symmetric)
      : k_(k), l_(l), symmetric_(symmetric), fixed_(found.size()) {
    const auto e = k.enclosing_ellipsoid(true);
    rho2_ = e.rho2;
    const std::size_t m = l.rank();
    const QMat h = l.basis().transpose() * e.n * l.basis();
    u_ = saturating_basis(found, m);

    // LLL-reduce the span block and the projected complement separately.
    QMat g = u_.transpose() * h * u_;
    const std::size_t s = fixed_;
    QMat blocks = QMat::identity(m);
    if (s > 0) {
      QMat g11(s, s);
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) g11(i, j) = g(i, j);
      const QMat r = lll_gram(g11);
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) blocks(i, j) = r(i, j);
    }
    {
      const std::size_t t = m - s;
      QMat proj(t, t);
      QMat g11(s, s), g12(s, t);
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) g11(i, j) = g(i, j);
        for (std::size_t j = 0; j < t; ++j) g12(i, j) = g(i, s + j);
      }
      const QMat corr = s > 0 ? g12.transpose() * inverse(g11) * g12 : QMat(t, t);
      for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) proj(i, j) = g(s + i, s + j) - corr(i, j);
      const QMat r = lll_gram(proj);
      for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) blocks(s + i, s + j) = r(i, j);
    }
    u_ = u_ * blocks;
    g = u_.transpose() * h * u_;
    basis_ = l.basis() * u_;

    low_.assign(m, std::vector<Rat>(m));
    d_.assign(m, Rat());
    for (std::size_t i = 0; i < m; ++i) {
      Rat v = g(i, i);
      for (std::size_t j = 0; j < i; ++j) v -= low_[i][j] * low_[i][j] * d_[j];
      d_[i] = v;
      for (std::size_t r = i + 1; r < m; ++r) {
        Rat t = g(r, i);
        for (std::size_t j = 0; j < i; ++j) t -= low_[r][j] * low_[i][j] * d_[j];
        low_[r][i] = t / d_[i];
      }
    }

    if (k.is_polytope()) {
      for (const auto& f : k.polytope().facets) {
        QVec row(m);
        for (std::size_t j = 0; j < m; ++j) row[j] = dot(f.a, basis_.column(j));
        facets_.push_back({std::move(row), f.b});
      }
    }
    best_.gauge = cap;
    w_.assign(m, Int(0));
  }

  Candidate run() {
    if (!w_.empty()) level(w_.size() - 1, Rat(0));
    return best_;
  }

 private:
  Rat bound() const { return rho2_ * best_.gauge.square(); }

  // Exact lower bound for the gauge over the slice where coordinates above
  // i are fixed, by linear programming; polytopes only.
  std::optional<QuadVal> slice_gauge(std::size_t i) const {
    if (facets_.empty()) return std::nullopt;
    std::vector<Halfspace> hs;
    for (const auto& f : facets_) {
      QVec a(i + 2);
      Rat rhs = 0;
      for (std::size_t j = 0; j <= i; ++j) a[j] = f.a[j];
      for (std::size_t j = i + 1; j < w_.size(); ++j) rhs -= f.a[j] * Rat(w_[j]);
      a[i + 1] = -f.b;
      hs.push_back({std::move(a), rhs});
    }
    QVec obj(i + 2);
    obj[i + 1] = 1;
    const auto r = lp_exact(hs, obj, Sense::minimize);
    if (r.status != LpStatus::optimal) return std::nullopt;
    return QuadVal::from_rational(std::max(r.value, Rat(0)));
  }

  bool prunable(std::size_t i, const Rat& used) {
    if (best_.found && used > best_.q) {
      const auto lb = slice_gauge(i);
      if (lb && *lb >= best_.gauge) return true;
    }
    return false;
  }

  void leaf(const Rat& q) {
    ZVec y(w_.size());
    for (std::size_t r = 0; r < w_.size(); ++r)
      for (std::size_t s = 0; s < w_.size(); ++s)
        if (w_[s] != 0) y[r] += u_(r, s).get_num() * w_[s];
    if (std::all_of(y.begin(), y.end(), [](const Int& v) { return v == 0; })) return;
    QVec x = l_.point(y);
    if (symmetric_ && !first_nonzero_positive(x)) return;
    QuadVal g = k_.gauge(x);
    if (!better(g, q, x, best_)) return;
    best_ = {std::move(g), q, std::move(y), std::move(x), true};
  }

  // Schnorr-Euchner order: nearest integers to the center first.
  void level(std::size_t i, const Rat& used) {
    Rat c = 0;
    for (std::size_t j = i + 1; j < w_.size(); ++j) c -= low_[j][i] * Rat(w_[j]);
    const Int mid = round_nearest(c);
    Int up = mid, down = mid - 1;
    bool up_open = true, down_open = true;
    while (up_open || down_open) {
      Int z;
      if (up_open && (!down_open || abs(Rat(up) - c) <= abs(Rat(down) - c))) {
        z = up;
        up += 1;
      } else {
        z = down;
        down -= 1;
      }
      const Rat t = Rat(z) - c;
      const Rat now = used + d_[i] * t * t;
      if (now > bound()) {
        (z >= mid ? up_open : down_open) = false;
        continue;
      }
      w_[i] = z;
      if (i == 0) {
        leaf(now);
      } else {
        // Leaving the tail block: the tail must be nonzero.
        const bool tail_zero = i == fixed_ && std::all_of(w_.begin() + static_cast<std::ptrdiff_t>(fixed_), w_.end(),
                                                          [](const Int& v) { return v == 0; });
        if (!tail_zero && !prunable(i - 1, now)) level(i - 1, now);
      }
    }
    w_[i] = 0;
  }

  const Body& k_;
  const Lattice& l_;
  bool symmetric_;
  std::size_t fixed_;
  Rat rho2_;
  QMat u_, basis_;
  std::vector<std::vector<Rat>> low_;
  std::vector<Rat> d_;
  std::vector<Halfspace> facets_;
  ZVec w_;
  Candidate best_;
};

MinimaResult minima_core(const Body& k, const Lattice& l, std::size_t count, bool symmetric) {
  if (k.dim() != l.ambient_dim()) throw std::invalid_argument("body and lattice dimensions differ");
  if (count == 0 || count > l.rank()) throw std::invalid_argument("number of minima must be in 1..rank");
  if (!k.has_origin_interior()) throw std::domain_error("successive minima need the origin in the interior");

  // Any i independent lattice vectors bound λ_i from above.
  std::vector<QuadVal> caps;
  for (const auto& v : reduced_basis(k, l)) {
    QuadVal g = k.gauge(v);
    if (!symmetric) g = std::min(g, k.gauge(scaled(v, -1)));
    caps.push_back(g);
  }
  std::sort(caps.begin(), caps.end());

  MinimaResult r;
  for (std::size_t s = 0; s < count; ++s) {
    auto c = StageSearch(k, l, r.coefficients, caps[s], symmetric).run();
    if (!c.found) throw std::logic_error("enumeration missed lattice points below a proven bound");
    r.values.push_back(std::move(c.gauge));
    r.witnesses.push_back(std::move(c.point));
    r.coefficients.push_back(std::move(c.coeffs));
  }
  return r;
}

}  // namespace

void enumerate_ellipsoid(const Lattice& l, const QMat& n, std::span<const Rat> center, const Rat& bound,
                         const std::function<void(const ZVec&, const QVec&)>& f) {
  const QMat& b = l.basis();
  const std::size_t m = l.rank();
  const QMat g = b.transpose() * n * b;
  // (By - c)^T N (By - c) = (y - y0)^T G (y - y0) + (c^T N c - y0^T G y0).
  const QVec rhs = b.transpose() * (n * center);
  const QVec y0 = *solve(g, rhs);
  const Rat budget = bound - (dot(center, n * center) - dot(y0, rhs));
  if (budget < 0) return;

  const QMat u = lll_gram(g);
  const QMat gr = u.transpose() * g * u;
  const QVec w0 = *solve(u, y0);

  // gr = L D L^T with L unit lower triangular.
  std::vector<std::vector<Rat>> low(m, std::vector<Rat>(m));
  std::vector<Rat> d(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rat s = gr(i, i);
    for (std::size_t k = 0; k < i; ++k) s -= low[i][k] * low[i][k] * d[k];
    d[i] = s;
    for (std::size_t j = i + 1; j < m; ++j) {
      Rat t = gr(j, i);
      for (std::size_t k = 0; k < i; ++k) t -= low[j][k] * low[i][k] * d[k];
      low[j][i] = t / d[i];
    }
  }

  // q(w) = Σ_i d_i (z_i + Σ_{j>i} L_{ji} z_j)^2 with z = w - w0.
  ZVec w(m);
  std::function<void(std::size_t, const Rat&)> level = [&](std::size_t i, const Rat& remaining) {
    Rat c = w0[i];
    for (std::size_t j = i + 1; j < m; ++j) c -= low[j][i] * (Rat(w[j]) - w0[j]);
    const auto [lo, hi] = integer_range(c, remaining / d[i]);
    for (Int k = lo; k <= hi; ++k) {
      w[i] = k;
      const Rat t = Rat(k) - c;
      const Rat rest = remaining - d[i] * t * t;
      if (i == 0) {
        ZVec y(m);
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t s = 0; s < m; ++s)
            if (w[s] != 0) y[r] += u(r, s).get_num() * w[s];
        f(y, l.point(y));
      } else {
        level(i - 1, rest);
      }
    }
  };
  level(m - 1, budget);
}

std::vector<GaugedPoint> enumerate_points(const Body& k, const Lattice& l, const QuadVal& radius) {
  if (!k.has_origin_interior()) throw std::domain_error("enumeration under a gauge needs the origin in the interior");
  if (k.dim() != l.ambient_dim()) throw std::invalid_argument("body and lattice dimensions differ");
  const auto e = k.enclosing_ellipsoid(true);
  std::vector<GaugedPoint> out;
  enumerate_ellipsoid(l, e.n, e.center, e.rho2 * radius.square(), [&](const ZVec& y, const QVec& x) {
    QuadVal g = k.gauge(x);
    if (g <= radius) out.push_back({y, x, std::move(g)});
  });
  std::sort(out.begin(), out.end(), [](const GaugedPoint& a, const GaugedPoint& b) { return lex_less(a.point, b.point); });
  return out;
}

MinimaResult successive_minima(const Body& k, const Lattice& l, std::size_t count) {
  if (!k.is_symmetric()) throw std::domain_error("successive_minima needs a symmetric body; symmetrize first");
  return minima_core(k, l, count, true);
}

MinimaResult star_minima(const Body& k, const Lattice& l, std::size_t count) {
  return minima_core(k, l, count, k.is_symmetric());
}

FirstMinimum first_minimum(const Body& k, const Lattice& l) {
  auto r = successive_minima(k, l, 1);
  return {r.values.front(), r.witnesses.front()};
}

LatticeWidth lattice_width(const Body& k, const Lattice& l) {
  if (!l.full_rank()) throw std::domain_error("lattice width needs a full-rank lattice");
  const Body w = polar_body(symmetrize(k)).scaled(Rat(1, 2));
  const auto m = first_minimum(w, polar_lattice(l));
  return {m.value, m.witness};
}

JarnikBracket jarnik_bracket(const Body& k, const Lattice& l) {
  const auto m = successive_minima(symmetrize(k), l, l.rank());
  const QuadVal half = QuadVal::from_rational(Rat(1, 2));
  Value sum = Rat(0);
  for (const auto& v : m.values) sum = sum + Value(v * half);
  return {m.values.back() * half, sum};
}

}  // namespace gon
