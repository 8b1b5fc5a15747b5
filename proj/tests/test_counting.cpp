#include <doctest.h>

#include "gon/counting.hpp"

#include <random>

using namespace gon;

namespace {

QVec qv(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Count over the integer bounding box of the vertices.
Int brute_count(const Body& k, bool interior = false) {
  const auto& vs = k.polytope().vertices;
  const std::size_t n = k.dim();
  std::vector<Int> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = ceil_int(vs.front()[i]);
    hi[i] = floor_int(vs.front()[i]);
    for (const auto& v : vs) {
      lo[i] = std::min(lo[i], ceil_int(v[i]));
      hi[i] = std::max(hi[i], floor_int(v[i]));
    }
    lo[i] -= 1;
    hi[i] += 1;
  }
  Int count = 0;
  std::vector<Int> x = lo;
  for (;;) {
    QVec q(n);
    for (std::size_t i = 0; i < n; ++i) q[i] = x[i];
    if (interior ? k.contains_interior(q) : k.contains(q)) ++count;
    std::size_t i = 0;
    while (i < n && x[i] == hi[i]) {
      x[i] = lo[i];
      ++i;
    }
    if (i == n) break;
    ++x[i];
  }
  return count;
}

}  // namespace

TEST_CASE("count_points") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (long k = 1; k <= 3; ++k)
      CHECK(count_points(Body::cube(n, k), Lattice::integer(n)) == pow(Int(2 * k + 1), static_cast<unsigned>(n)));
  CHECK(count_points(Body::cross(2), Lattice::integer(2)) == 5);
  CHECK(count_points(Body::cross(2), Lattice::integer(2), true) == 1);
  const Body t2 = centered_simplex(2);
  CHECK(count_points(t2, Lattice::integer(2)) == brute_count(t2));
  CHECK(count_points(t2, Lattice::integer(2), true) == brute_count(t2, true));
  CHECK(count_points(t2, Lattice::integer(2)) == 10);

  // Bodies away from the origin.
  const Body tri = Body::vpoly({qv({3, 5}), qv({9, 6}), qv({4, 11})});
  CHECK(count_points(tri, Lattice::integer(2)) == brute_count(tri));
  const Body shifted = centered_simplex(3).translated(QVec{Rat(7, 2), -4, Rat(1, 3)});
  CHECK(count_points(shifted, Lattice::integer(3)) == brute_count(shifted));
  CHECK(count_points(shifted, Lattice::integer(3), true) == brute_count(shifted, true));

  // Other lattices: 2Z x Z inside the cube.
  CHECK(count_points(Body::cube(2, 2), Lattice(QMat{{2, 0}, {0, 1}})) == 15);
}

TEST_CASE("counting invariants") {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int t = 0; t < 20; ++t) {
    std::vector<QVec> pts;
    for (int i = 0; i < 6; ++i) pts.push_back({d(rng), d(rng), d(rng)});
    if (affine_dimension(pts) < 3) continue;
    const Body k = Body::vpoly(pts);
    CHECK(count_points(k, Lattice::integer(3)) == brute_count(k));
    // Λ-preserving maps keep the count.
    const QMat u{{1, 1, 0}, {0, 1, 0}, {0, -2, 1}};
    CHECK(count_points(k.transformed(u), Lattice::integer(3)) == count_points(k, Lattice::integer(3)));
    // Monotone under inclusion.
    CHECK(count_points(k, Lattice::integer(3)) <= count_points(k.scaled(2), Lattice::integer(3)) + (k.contains(QVec(3)) ? 0 : 1000));
  }
  // Symmetric bodies contain an odd number of points.
  for (const Body& k : {Body::cube(3, Rat(3, 2)), Body::cross(3, Rat(5, 2)), generalized_hexagon(QVec{Rat(1, 3), Rat(2, 3)})})
    CHECK(count_points(k, Lattice::integer(k.dim())) % 2 == 1);
}

TEST_CASE("ehrhart") {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto p = ehrhart(Body::cube(n), Lattice::integer(n));
    for (unsigned i = 0; i <= n; ++i) CHECK(p.coeffs[i] == Rat(binomial(n, i)) * pow(Rat(2), i));
    CHECK(p.evaluate(n + 2) == Rat(count_points(Body::cube(n, n + 2), Lattice::integer(n))));
    // Discrete volume-surface relation holds with equality for the cube.
    CHECK(p.coeffs[n - 1] / p.coeffs[n] == make_rat(n, 2));
  }
  const auto x = ehrhart(Body::cross(2), Lattice::integer(2));
  CHECK(x.coeffs == QVec{1, 2, 2});
  const auto t = ehrhart(centered_simplex(3), Lattice::integer(3));
  CHECK(t.coeffs.front() == 1);
  CHECK(t.coeffs.back() == *centered_simplex(3).exact_volume());
  CHECK_THROWS_AS(ehrhart(Body::cube(2, Rat(1, 2)), Lattice::integer(2)), std::domain_error);
}

TEST_CASE("ehrhart_codim1 matches the interpolated coefficient") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> d(-1, 1);
  const std::vector<Body> bodies = {Body::cube(2), Body::cross(3), centered_simplex(3), dual_centered_simplex(2),
                                    Body::box(qv({2, 1, 1})), Body::vpoly({qv({0, 0}), qv({3, 1}), qv({1, 2})})};
  for (const auto& b : bodies) {
    const std::size_t n = b.dim();
    CHECK(ehrhart_codim1(b, Lattice::integer(n)) == ehrhart(b, Lattice::integer(n)).coeffs[n - 1]);
    // A sublattice containing the vertices: 2Z^n around 2P.
    QMat two = QMat::identity(n);
    for (std::size_t i = 0; i < n; ++i) two(i, i) = 2;
    const Body b2 = b.scaled(2);
    CHECK(ehrhart_codim1(b2, Lattice(two)) == ehrhart(b, Lattice::integer(n)).coeffs[n - 1]);
    // Unimodular images of Z^n leave the count invariant.
    QMat u = QMat::identity(n);
    for (std::size_t i = 0; i + 1 < n; ++i) u(i, i + 1) = d(rng);
    const Lattice ul(u);
    const Body ub = b.transformed(u);
    CHECK(ehrhart_codim1(ub, ul) == ehrhart(ub, ul).coeffs[n - 1]);
  }
  CHECK_THROWS_AS(ehrhart_codim1(Body::cube(2, Rat(1, 2)), Lattice::integer(2)), std::domain_error);
}

TEST_CASE("count_ratio_bounds") {
  const auto c2 = count_ratio_bounds(Body::cube(2), Lattice::integer(2), {1, 2, 4});
  CHECK(c2[0].ratio == Rat(9, 4));
  CHECK(c2[1].ratio == Rat(25, 16));
  CHECK(c2[2].ratio == Rat(81, 64));
  CHECK(count_ratio_bounds(Body::cube(3), Lattice::integer(3), {1})[0].ratio == Rat(27, 8));
  const auto x = count_ratio_bounds(Body::cross(2), Lattice::integer(2), {3});
  CHECK(x[0].count == 25);
  CHECK(x[0].ratio == Rat(25, 18));
}
