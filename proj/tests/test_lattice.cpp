#include <doctest.h>

#include "gon/lattice.hpp"
#include "gon/normal_form.hpp"
#include "gon/polytope.hpp"

#include <random>

using namespace gon;

namespace {

QVec qv(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

QMat random_full_rank(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  std::uniform_int_distribution<long> d(-9, 9);
  for (;;) {
    QMat a(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
    if (rank(a) == m) return a;
  }
}

// gcd of all maximal minors, by listing column subsets.
Int brute_maximal_minor_gcd(const QMat& a) {
  Int g = 0;
  for_each_subset(a.cols(), a.rows(), [&](const std::vector<std::size_t>& cs) {
    QMat sub(a.rows(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.rows(); ++j) sub(i, j) = a(i, cs[j]);
    g = gcd(g, determinant(sub).get_num());
    return true;
  });
  return g;
}

}  // namespace

TEST_CASE("make_lattice") {
  CHECK(Lattice::integer(3).gram_det() == 1);
  const Lattice skew(QMat::from_columns({qv({2, 0}), qv({1, 3})}));
  CHECK(*skew.det().rational() == 6);
  const Lattice embedded(QMat::from_columns({qv({2, -1, 0}), qv({3, 0, -1})}));
  CHECK(embedded.gram_det() == 14);
  CHECK_FALSE(embedded.det().rational().has_value());
  CHECK_THROWS_AS(Lattice(QMat::from_columns({qv({1, 2}), qv({2, 4})})), std::domain_error);
}

TEST_CASE("polar_lattice") {
  CHECK(polar_lattice(Lattice::integer(3)) == Lattice::integer(3));
  const auto p = polar_lattice(Lattice(QMat{{2, 0}, {0, 3}}));
  CHECK(p.basis()(0, 0) == Rat(1, 2));
  CHECK(p.basis()(1, 1) == Rat(1, 3));
  const Lattice skew(QMat::from_columns({qv({2, 0}), qv({1, 3})}));
  const auto ps = polar_lattice(skew);
  CHECK(*ps.det().rational() == Rat(1, 6));
  // Dual pairing is integral.
  const QMat pairing = skew.basis().transpose() * ps.basis();
  CHECK(pairing == QMat::identity(2));

  std::mt19937_64 rng(21);
  for (int t = 0; t < 30; ++t) {
    const Lattice l(random_full_rank(rng, 3, 3));
    CHECK(l.gram_det() * polar_lattice(l).gram_det() == 1);
  }
}

TEST_CASE("kernel_lattice") {
  const auto k111 = kernel_lattice(QMat{{1, 1, 1}});
  CHECK(k111.gram_det() == 3);
  CHECK(kernel_lattice(QMat{{1, 2, 3}}).gram_det() == 14);
  const auto k24 = kernel_lattice(QMat{{2, 4}});
  CHECK(k24.gram_det() == 5);
  CHECK(contains(k24, qv({2, -1})));
  CHECK_THROWS_AS(kernel_lattice(QMat{{1, 2}, {2, 4}}), std::domain_error);
  CHECK_THROWS_AS(kernel_lattice(QMat{{1, 0}, {0, 1}}), std::domain_error);
}

TEST_CASE("minors_gcd") {
  CHECK(minors_gcd(QMat{{1, 2, 3}}) == 1);
  CHECK(minors_gcd(QMat{{2, 4, 6}}) == 2);
  CHECK(minors_gcd(QMat{{1, 0, 1}, {0, 2, 2}}) == 2);
  std::mt19937_64 rng(22);
  for (int t = 0; t < 40; ++t) {
    const QMat a = random_full_rank(rng, 2, 4);
    CHECK(minors_gcd(a) == brute_maximal_minor_gcd(a));
  }
}

TEST_CASE("contains") {
  CHECK(contains(Lattice::integer(2), qv({3, -5})));
  CHECK_FALSE(contains(Lattice::integer(2), QVec{Rat(1, 2), 0}));
  CHECK(contains(kernel_lattice(QMat{{1, 2, 3}}), qv({1, 1, -1})));
  CHECK_FALSE(contains(kernel_lattice(QMat{{1, 2, 3}}), qv({1, 1, 1})));
}

TEST_CASE("kernel lattices are saturated") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 12; ++t) {
    const std::size_t n = 3 + static_cast<std::size_t>(t % 2);
    const QMat a = random_full_rank(rng, t % 3 == 0 ? 2 : 1, n);
    const auto l = kernel_lattice(a);
    // Every integer kernel point with ||x||_inf <= 5 belongs to it.
    std::vector<long> x(n, -5);
    for (;;) {
      QVec q(n);
      for (std::size_t i = 0; i < n; ++i) q[i] = x[i];
      if (is_zero(a * q)) CHECK(contains(l, q));
      std::size_t i = 0;
      while (i < n && x[i] == 5) x[i++] = -5;
      if (i == n) break;
      ++x[i];
    }
  }
}

TEST_CASE("kernel determinant identity") {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 60; ++t) {
    std::uniform_int_distribution<std::size_t> dn(2, 7);
    const std::size_t n = dn(rng);
    std::uniform_int_distribution<std::size_t> dm(1, std::min<std::size_t>(4, n - 1));
    const QMat a = random_full_rank(rng, dm(rng), n);
    const Int g = minors_gcd(a);
    CHECK(kernel_lattice(a).gram_det() * Rat(g * g) == determinant(a * a.transpose()));
  }
}

TEST_CASE("unimodular change of basis keeps the Gram determinant") {
  const Lattice l(QMat{{2, 1, 0}, {0, 3, 1}, {1, 0, 5}});
  const QMat u{{1, 2, 0}, {0, 1, 0}, {3, 7, 1}};
  REQUIRE(abs(determinant(u)) == 1);
  CHECK(Lattice(l.basis() * u).gram_det() == l.gram_det());
}
