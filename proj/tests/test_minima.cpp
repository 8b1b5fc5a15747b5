#include <doctest.h>

#include "gon/minima.hpp"

#include <random>

using namespace gon;

namespace doctest {
template <>
struct StringMaker<QuadVal> {
  static String convert(const QuadVal& q) { return to_string(q).c_str(); }
};
}  // namespace doctest

namespace {

QVec qv(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Lattice skew() { return Lattice(QMat::from_columns({qv({2, 0}), qv({1, 3})})); }

// λ_i straight from the definition over the lattice points with
// coefficients in [-r, r]^m.
std::vector<QuadVal> oracle_minima(const Body& k, const Lattice& l, long r) {
  const std::size_t m = l.rank();
  std::vector<std::pair<QuadVal, QVec>> pts;
  std::vector<long> c(m, -r);
  for (;;) {
    ZVec z(c.begin(), c.end());
    const QVec x = l.point(z);
    if (!is_zero(x)) pts.emplace_back(k.gauge(x), x);
    std::size_t i = 0;
    while (i < m && c[i] == r) c[i++] = -r;
    if (i == m) break;
    ++c[i];
  }
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  // Scan by increasing gauge; λ_i is the gauge at which the span of the
  // points seen so far first reaches dimension i.
  std::vector<QuadVal> out;
  std::vector<QVec> seen;
  for (const auto& [g, x] : pts) {
    seen.push_back(x);
    while (out.size() < m && rank_of(seen) > out.size()) out.push_back(g);
    if (out.size() == m) break;
  }
  return out;
}

QMat random_unimodular(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(-1, 1);
  QMat upper = QMat::identity(n), lower = QMat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      upper(i, j) = d(rng);
      lower(j, i) = d(rng);
    }
  return upper * lower;
}

Body random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(-3, 3);
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < n; ++i) {
    QVec a(n);
    a[i] = 1;
    hs.push_back({a, Rat(1 + std::abs(d(rng)))});
    hs.push_back({scaled(a, -1), hs.back().b});
  }
  for (int e = 0; e < 2; ++e) {
    QVec a(n);
    for (auto& x : a) x = d(rng);
    if (is_zero(a)) continue;
    const Rat b(2 + std::abs(d(rng)));
    hs.push_back({a, b});
    hs.push_back({scaled(a, -1), b});
  }
  return Body::hpoly(hs, n);
}

}  // namespace

TEST_CASE("enumerate_points") {
  CHECK(enumerate_points(Body::cube(2), Lattice::integer(2), QuadVal::from_rational(1)).size() == 9);
  const auto s = enumerate_points(Body::cube(2), skew(), QuadVal::from_rational(2));
  REQUIRE(s.size() == 3);
  CHECK(s[0].point == qv({-2, 0}));
  CHECK(s[1].point == qv({0, 0}));
  CHECK(s[2].point == qv({2, 0}));
  const auto sec = enumerate_points(Body::cube(3), kernel_lattice(QMat{{1, 2, 3}}), QuadVal::from_rational(1));
  REQUIRE(sec.size() == 3);
  CHECK(sec[0].point == qv({-1, -1, 1}));
  CHECK(sec[2].point == qv({1, 1, -1}));
}

TEST_CASE("successive minima of the standard examples") {
  const auto box = successive_minima(Body::box(QVec{5, 2, Rat(1, 3)}), Lattice::integer(3), 3);
  CHECK(box.values[0] == QuadVal::from_rational(Rat(1, 5)));
  CHECK(box.values[1] == QuadVal::from_rational(Rat(1, 2)));
  CHECK(box.values[2] == QuadVal::from_rational(3));
  CHECK(box.witnesses[0] == qv({1, 0, 0}));

  const auto sk = successive_minima(Body::cube(2), skew(), 2);
  CHECK(sk.values[0] == QuadVal::from_rational(2));
  CHECK(sk.values[1] == QuadVal::from_rational(3));
  // λ_1 λ_2 vol = 2^2 det.
  CHECK(*sk.values[0].rational() * *sk.values[1].rational() * 4 == 4 * 6);

  for (std::size_t n = 1; n <= 4; ++n) {
    const auto c = successive_minima(Body::cross(n), Lattice::integer(n), n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(c.values[i] == QuadVal::from_rational(1));
      QVec e(n);
      e[i] = 1;
      CHECK(c.witnesses[i] == e);
    }
    CHECK(first_minimum(Body::cube(n, 2), Lattice::integer(n)).value == QuadVal::from_rational(Rat(1, 2)));
  }
  const auto ell = first_minimum(Body::ellipsoid(QMat{{1, 0}, {0, 4}}), Lattice::integer(2));
  CHECK(ell.value.square() == 1);
  CHECK(ell.witness == qv({1, 0}));

  CHECK_THROWS_AS(successive_minima(centered_simplex(2), Lattice::integer(2), 1), std::domain_error);
  CHECK_THROWS_AS(successive_minima(Body::cube(2), Lattice::integer(2), 3), std::invalid_argument);
}

TEST_CASE("minima of embedded sections") {
  const auto s111 = successive_minima(Body::cube(3), kernel_lattice(QMat{{1, 1, 1}}), 2);
  CHECK(s111.values[0] == QuadVal::from_rational(1));
  CHECK(s111.values[1] == QuadVal::from_rational(1));
  const auto s123 = successive_minima(Body::cube(3), kernel_lattice(QMat{{1, 2, 3}}), 2);
  CHECK(s123.values[0] == QuadVal::from_rational(1));
  CHECK(s123.values[1] == QuadVal::from_rational(2));
}

TEST_CASE("star minima of T_n^*") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto m = star_minima(dual_centered_simplex(n), Lattice::integer(n), n);
    for (const auto& v : m.values) CHECK(v == QuadVal::from_rational(1));
    CHECK(rank_of(m.witnesses) == n);
  }
}

TEST_CASE("engine agrees with the definitional oracle") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 2);
    const Body k = t % 3 == 0 ? Body::ellipsoid(QMat{{2, 1}, {1, 3}}).scaled(Rat(5, 2)) : random_symmetric(rng, n);
    const std::size_t dim = k.dim();
    std::uniform_int_distribution<long> dg(1, 3);
    std::vector<Rat> diag(dim);
    for (auto& x : diag) x = dg(rng);
    const Lattice l(random_unimodular(rng, dim) * QMat::diagonal(diag));
    const auto engine = successive_minima(k, l, dim);
    const auto oracle = oracle_minima(k, l, dim == 2 ? 20 : 12);
    REQUIRE(oracle.size() == dim);
    for (std::size_t i = 0; i < dim; ++i) {
      INFO("witness coefficients ", to_string(to_qvec(engine.coefficients[i])));
      CHECK(engine.values[i] == oracle[i]);
    }
    CHECK(rank_of(engine.witnesses) == dim);
    for (std::size_t i = 0; i < dim; ++i) CHECK(k.gauge(engine.witnesses[i]) == engine.values[i]);
  }
}

TEST_CASE("homogeneity and invariance") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 10; ++t) {
    const Body k = random_symmetric(rng, 3);
    const Lattice l(random_unimodular(rng, 3) * QMat::diagonal(std::vector<Rat>{1, 2, 1}));
    const auto base = successive_minima(k, l, 3);
    const Rat s(3, 2);
    const auto dil = successive_minima(k.scaled(s), l, 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(dil.values[i] * QuadVal::from_rational(s) == base.values[i]);
    // Another basis of the same lattice.
    const auto other = successive_minima(k, Lattice(l.basis() * random_unimodular(rng, 3)), 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(other.values[i] == base.values[i]);
    // λ_i(B^{-1} K, Z^n) = λ_i(K, B Z^n).
    const auto pulled = successive_minima(k.transformed(inverse(l.basis())), Lattice::integer(3), 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(pulled.values[i] == base.values[i]);
  }
}

TEST_CASE("Minkowski sandwich and transference") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 2);
    const Body k = random_symmetric(rng, n);
    const Lattice l(random_unimodular(rng, n) * QMat::diagonal(std::vector<Rat>(n, Rat(1 + t % 3))));
    const auto m = successive_minima(k, l, n);
    Rat prod = *k.exact_volume();
    for (const auto& v : m.values) prod *= *v.rational();
    const Rat det = *l.det().rational();
    const Rat two_n = pow(Rat(2), static_cast<unsigned>(n));
    CHECK(prod <= two_n * det);
    CHECK(prod >= two_n * det / Rat(factorial(static_cast<unsigned>(n))));

    const auto d = successive_minima(polar_body(k), polar_lattice(l), n);
    for (std::size_t i = 0; i < n; ++i) {
      const Rat p = *m.values[i].rational() * *d.values[n - 1 - i].rational();
      CHECK(p >= 1);
      CHECK(p <= Rat(factorial(static_cast<unsigned>(n))));
    }
  }
}

TEST_CASE("lattice_width") {
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto w = lattice_width(Body::cube(n), Lattice::integer(n));
    CHECK(w.value == QuadVal::from_rational(2));
    QVec e(n);
    e[0] = 1;
    CHECK(w.direction == e);
    CHECK(lattice_width(Body::ellipsoid(QMat::identity(n)), Lattice::integer(n)).value == QuadVal::from_rational(2));
  }
  // Brute-force width of T_2 over small integer directions.
  const Body t2 = centered_simplex(2);
  QuadVal best = QuadVal::from_rational(1000);
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b)
      if (a != 0 || b != 0) best = std::min(best, t2.width(qv({a, b})));
  CHECK(lattice_width(t2, Lattice::integer(2)).value == best);
  CHECK(best == QuadVal::from_rational(3));
}

TEST_CASE("jarnik_bracket") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto j = jarnik_bracket(Body::cube(n), Lattice::integer(n));
    CHECK(j.lower == QuadVal::from_rational(Rat(1, 2)));
    CHECK(*j.upper.rational() == make_rat(static_cast<long>(n), 2));
  }
  const auto jb = jarnik_bracket(Body::box(QVec{4, 2, 1}), Lattice::integer(3));
  CHECK(jb.lower == QuadVal::from_rational(Rat(1, 2)));
  CHECK(*jb.upper.rational() == Rat(1, 8) + Rat(1, 4) + Rat(1, 2));
  const auto jh = jarnik_bracket(generalized_hexagon(qv({1, 1})), Lattice::integer(2));
  CHECK(jh.lower == QuadVal::from_rational(Rat(1, 2)));
  CHECK(*jh.upper.rational() == 1);
}
