#include <doctest.h>

#include "gon/siegel.hpp"
#include "oracles.hpp"

#include <random>

using namespace gon;

namespace {

ZVec zv(std::initializer_list<long> xs) { return ZVec(xs.begin(), xs.end()); }

QMat random_full_rank(std::mt19937_64& rng, std::size_t m, std::size_t n, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  for (;;) {
    QMat a(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
    if (rank(a) == m) return a;
  }
}

// Integer kernel vectors of A with ||x||_inf <= r, by ||x||_inf; returns the
// minima of the cube section from the definition.
std::vector<long> brute_section_minima(const QMat& a, long r) {
  const std::size_t n = a.cols();
  std::vector<std::pair<long, QVec>> pts;
  std::vector<long> x(n, -r);
  for (;;) {
    QVec q(x.begin(), x.end());
    if (!is_zero(q) && is_zero(a * q)) {
      long norm = 0;
      for (long v : x) norm = std::max(norm, std::abs(v));
      pts.emplace_back(norm, q);
    }
    std::size_t i = 0;
    while (i < n && x[i] == r) x[i++] = -r;
    if (i == n) break;
    ++x[i];
  }
  std::stable_sort(pts.begin(), pts.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  std::vector<long> out;
  std::vector<QVec> seen;
  const std::size_t d = n - a.rows();
  for (const auto& [g, q] : pts) {
    seen.push_back(q);
    while (out.size() < d && rank_of(seen) > out.size()) out.push_back(g);
    if (out.size() == d) break;
  }
  return out;
}

}  // namespace

TEST_CASE("siegel_solve examples") {
  const auto s = siegel_solve(QMat{{1, 2, 3}});
  REQUIRE(s.vectors.size() == 2);
  CHECK(s.vectors[0] == zv({1, 1, -1}));
  CHECK(s.product_norm == 2);
  CHECK(s.bv_bound.square() == 14);
  CHECK(s.bv_certified);
  CHECK(s.classical_certified);
  CHECK(brute_section_minima(QMat{{1, 2, 3}}, 3) == std::vector<long>{1, 2});

  for (std::size_t n = 2; n <= 5; ++n) {
    QMat ones(1, n);
    for (std::size_t j = 0; j < n; ++j) ones(0, j) = 1;
    CHECK(siegel_solve(ones).product_norm == 1);
  }

  const QMat a{{1, 0, 1}, {0, 2, 2}};
  const auto t = siegel_solve(a);
  REQUIRE(t.vectors.size() == 1);
  CHECK(t.vectors[0] == zv({1, 1, -1}));
  CHECK(t.bv_bound.square() == Rat(determinant(a * a.transpose())) / 4);
  CHECK(t.bv_certified);

  CHECK_THROWS_AS(siegel_solve(QMat{{1, 2}, {2, 4}, {0, 1}}), std::domain_error);
  CHECK_THROWS_AS(siegel_solve(QMat{{1, 2, 3}, {2, 4, 6}}), std::domain_error);
}

TEST_CASE("siegel_solve against exhaustive search") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 40; ++t) {
    std::uniform_int_distribution<std::size_t> dn(2, 4);
    const std::size_t n = dn(rng);
    std::uniform_int_distribution<std::size_t> dm(1, n - 1);
    const QMat a = random_full_rank(rng, dm(rng), n, 3);
    const auto s = siegel_solve(a);
    REQUIRE(s.vectors.size() == n - a.rows());
    std::vector<QVec> qs;
    for (const auto& x : s.vectors) {
      qs.push_back(to_qvec(x));
      CHECK(is_zero(a * qs.back()));
    }
    CHECK(rank_of(qs) == qs.size());
    CHECK(s.bv_certified);
    CHECK(s.classical_certified);
    // λ_i <= Π λ_j <= bv bound, so the bound caps the search box.
    const long r = floor_int(Rat(s.product_norm)).get_si();
    const auto brute = brute_section_minima(a, r);
    long prod = 1;
    for (long v : brute) prod *= v;
    CHECK(Int(prod) == s.product_norm);
  }
}

TEST_CASE("cube sections") {
  const auto e3 = section_body(QMat{{0, 0, 1}});
  CHECK(e3.dim() == 2);
  CHECK(e3.volume_squared == 16);
  CHECK(e3.vaaler_holds());
  // Regular hexagon of side sqrt(2): area 3 sqrt(3).
  CHECK(section_body(QMat{{1, 1, 1}}).volume_squared == 27);

  // vol(S(a)) = vol(K(a)) ||a||_2 / a_n through the coordinate projection.
  std::mt19937_64 rng(62);
  std::uniform_int_distribution<long> d(1, 9);
  for (int t = 0; t < 15; ++t) {
    const std::size_t n = 3 + static_cast<std::size_t>(t % 2);
    ZVec a(n);
    for (auto& x : a) x = d(rng);
    std::sort(a.begin(), a.end());
    QMat row(1, n);
    Int norm2 = 0;
    for (std::size_t j = 0; j < n; ++j) {
      row(0, j) = a[j];
      norm2 += a[j] * a[j];
    }
    const auto sec = section_body(row);
    const Rat vk = *project_body(a).body().exact_volume();
    CHECK(sec.volume_squared == vk * vk * Rat(norm2) / Rat(a.back() * a.back()));
    CHECK(sec.vaaler_holds());
  }
  const auto two = section_body(QMat{{1, 0, 1, 2}, {0, 2, 2, 1}});
  CHECK(two.dim() == 2);
  CHECK(two.vaaler_holds());
}

TEST_CASE("projected hexagons") {
  CHECK(project_body(zv({1, 1, 1})).alphas() == QVec{1, 1});
  CHECK(project_body(zv({1, 2, 3})).alphas() == QVec{Rat(1, 3), Rat(2, 3)});
  CHECK(project_body(zv({2, 3, 5, 5})).alphas() == QVec{Rat(2, 5), Rat(3, 5), 1});
  CHECK_THROWS_AS(project_body(zv({2, 1, 3})), std::invalid_argument);
  CHECK_THROWS_AS(project_body(zv({0, 1, 3})), std::invalid_argument);
  CHECK_THROWS_AS(GeneralizedHexagon(QVec{Rat(3, 2)}), std::invalid_argument);

  std::mt19937_64 rng(63);
  std::uniform_int_distribution<long> d(1, 12);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 3 + static_cast<std::size_t>(t % 3);
    ZVec a(n);
    for (auto& x : a) x = d(rng);
    std::sort(a.begin(), a.end());
    const auto k = project_body(a);
    const auto inner = smaller_section(k);
    CHECK(k.contains(inner));
    if (n == 3) CHECK(inner.alphas() == QVec{1, 1});
    // Forgetting the last coordinate carries S(a) onto K(a), so gauges of
    // kernel points survive the projection.
    QMat row(1, n);
    for (std::size_t j = 0; j < n; ++j) row(0, j) = a[j];
    const Lattice l = kernel_lattice(row);
    const Body kb = k.body();
    std::uniform_int_distribution<long> dc(-3, 3);
    for (int i = 0; i < 10; ++i) {
      ZVec c(n - 1);
      for (auto& x : c) x = dc(rng);
      const QVec x = l.point(c);
      const QVec px(x.begin(), x.end() - 1);
      CHECK(kb.gauge(px) == Body::cube(n).gauge(x));
    }
  }
  // Containment is one-sided.
  CHECK_FALSE(GeneralizedHexagon(QVec{1, 1}).contains(GeneralizedHexagon(QVec{Rat(1, 3), Rat(2, 3)})));
}

TEST_CASE("critical determinants") {
  CHECK(whitworth_delta(1) == Rat(19, 27));
  CHECK(whitworth_delta(Rat(1, 4)) == Rat(3, 4));
  CHECK(whitworth_delta(Rat(1, 2)) == Rat(3, 4));
  CHECK(-(Rat(1, 4) + Rat(3, 2) - 24 + 2) / 27 == Rat(3, 4));
  CHECK_THROWS_AS(whitworth_delta(0), std::invalid_argument);
  CHECK_THROWS_AS(whitworth_delta(Rat(3, 2)), std::invalid_argument);
  // Minimum over [1/2, 1] at β = 1.
  for (long k = 50; k <= 100; ++k) CHECK(whitworth_delta(make_rat(k, 100)) >= Rat(19, 27));

  CHECK(hexagon_delta2() == Rat(3, 4));
  const auto p = hexagon_packing();
  CHECK(p.det == hexagon_delta2());
  CHECK(p.first_minimum == QuadVal::from_rational(1));
  CHECK(p.translates_disjoint);

  CHECK(projected_delta_lower(zv({3, 5})) == 1);
  CHECK(projected_delta_lower(zv({1, 2, 3})) == Rat(3, 4));
  CHECK(projected_delta_lower(zv({1, 1, 1, 1})) == Rat(19, 27));
  CHECK(projected_delta_lower(zv({1, 4, 5, 7})) == Rat(3, 4));
}

TEST_CASE("sinc constants") {
  CHECK(sinc_sigma(1) == 1);
  CHECK(sinc_sigma(2) == 1);
  CHECK(sinc_sigma(3) == Rat(3, 4));
  CHECK(sinc_sigma(4) == Rat(2, 3));
  const auto fx = oracle::load_sinc_fixture();
  REQUIRE(fx.numerators.size() == fx.denominators.size());
  for (std::size_t i = 0; i < fx.numerators.size(); ++i) {
    const Rat half = sinc_sigma(static_cast<unsigned>(i + 1)) / 2;
    CHECK(half.get_num() == fx.numerators[i]);
    CHECK(half.get_den() == fx.denominators[i]);
  }
  for (unsigned n = 1; n <= 12; ++n) {
    INFO("n = ", n);
    const auto q = oracle::sinc_integral(n);
    CHECK(q.tail_bound < 1e-11);
    CHECK(std::abs(q.value - sinc_sigma(n).get_d()) < 1e-9);
  }
}

TEST_CASE("scan_constants") {
  const auto s2 = scan_constants(2, 15, true);
  CHECK(s2.empirical_s == 1);
  CHECK(s2.empirical_c == 1);
  CHECK(s2.strictly_below_known);

  const auto s3 = scan_constants(3, 8, true, 3);
  const auto serial = scan_constants_serial(3, 8, true);
  REQUIRE(s3.records.size() == serial.records.size());
  for (std::size_t i = 0; i < s3.records.size(); ++i) {
    CHECK(s3.records[i].a == serial.records[i].a);
    CHECK(s3.records[i].minima == serial.records[i].minima);
  }
  CHECK(s3.empirical_s == serial.empirical_s);
  CHECK(s3.s_witness == serial.s_witness);
  CHECK(s3.c_le_s_everywhere);
  CHECK(s3.bv_everywhere);
  CHECK(s3.projected_everywhere);
  CHECK(s3.below_sqrt_n);
  CHECK(s3.below_sigma_inverse);
  CHECK(s3.strictly_below_known);

  // Records agree with the exhaustive section search.
  for (std::size_t i = 0; i < s3.records.size(); i += 7) {
    const auto& r = s3.records[i];
    QMat row(1, 3);
    for (std::size_t j = 0; j < 3; ++j) row(0, j) = r.a[j];
    const auto brute = brute_section_minima(row, 8);
    CHECK(brute.size() == 2);
    CHECK(Int(brute[0]) == r.minima[0]);
    CHECK(Int(brute[1]) == r.minima[1]);
  }

  const auto all = scan_constants(3, 6, false);
  const auto prim = scan_constants(3, 6, true);
  CHECK(all.records.size() > prim.records.size());
  CHECK(all.empirical_s == prim.empirical_s);
  CHECK_THROWS_AS(scan_constants(3, 0, true), std::invalid_argument);
  CHECK_THROWS_AS(scan_constants(6, 100, true), std::length_error);
}
