#pragma once

// Independent oracles shared by the unit tests and the acceptance runner.

#include "gon/body.hpp"
#include "gon/lattice.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace oracle {

struct Quadrature {
  double value;
  double tail_bound;
};

// (2/π) ∫_0^∞ (sin t / t)^n dt: Gauss on every [kπ, (k+1)π] up to T = Kπ,
// plus the tail.  For n >= 3 the tail is bounded by (2/π) T^{1-n}/(n-1);
// for n = 1, 2 its asymptotic expansion at T = Kπ is added instead.
inline Quadrature sinc_integral(unsigned n) {
  const double pi = boost::math::constants::pi<double>();
  long periods = 4000;
  if (n >= 3) {
    // Smallest K with (2/π) (Kπ)^{1-n}/(n-1) < 1e-12.
    const double t = std::pow(2.0 / pi / (n - 1) / 1e-12, 1.0 / (n - 1));
    periods = std::max<long>(16, static_cast<long>(std::ceil(t / pi)));
  }
  auto f = [n](double t) { return std::pow(std::sin(t) / t, static_cast<int>(n)); };
  double sum = 0;
  for (long k = periods - 1; k >= 0; --k)
    sum += boost::math::quadrature::gauss<double, 30>::integrate(f, k * pi, (k + 1) * pi);
  const double big_t = periods * pi;
  double tail = 0, bound = 0;
  if (n == 1) {
    // ∫_T^∞ sin t / t dt = (-1)^K (1/T - 2/T^3 + O(T^-5)).
    tail = (periods % 2 == 0 ? 1 : -1) * (1 / big_t - 2 / std::pow(big_t, 3));
    bound = 24 / std::pow(big_t, 5);
  } else if (n == 2) {
    // ∫_T^∞ sin^2 t / t^2 dt = 1/(2T) - 1/(4T^3) + O(T^-5).
    tail = 1 / (2 * big_t) - 1 / (4 * std::pow(big_t, 3));
    bound = 3 / std::pow(big_t, 5);
  } else {
    bound = std::pow(big_t, 1.0 - n) / (n - 1);
  }
  return {2 / pi * (sum + tail), 2 / pi * bound};
}

struct SincFixture {
  std::vector<long> numerators;
  std::vector<long> denominators;
};

inline SincFixture load_sinc_fixture() {
  std::ifstream in(std::string(GON_DATA_DIR) + "/sinc_oeis.json");
  const auto j = nlohmann::json::parse(in);
  return {j.at("A049330").get<std::vector<long>>(), j.at("A049331").get<std::vector<long>>()};
}

// λ_i straight from the definition over the lattice points with
// coefficients in [-r, r]^m, for a symmetric body.
inline std::vector<gon::QuadVal> brute_minima(const gon::Body& k, const gon::Lattice& l, long r) {
  using namespace gon;
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
  std::vector<QuadVal> out;
  std::vector<QVec> seen;
  for (const auto& [g, x] : pts) {
    seen.push_back(x);
    while (out.size() < m && rank_of(seen) > out.size()) out.push_back(g);
    if (out.size() == m) break;
  }
  return out;
}

// Bareiss fraction-free determinant of an integer matrix.
inline gon::Int int_det(std::vector<std::vector<gon::Int>> m) {
  const std::size_t n = m.size();
  gon::Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return n == 0 ? gon::Int(1) : gon::Int(sign * m[n - 1][n - 1]);
}

// gcd of all maximal minors, enumerating column subsets directly.
inline gon::Int minors_gcd(const std::vector<std::vector<long>>& a) {
  const std::size_t m = a.size(), n = a[0].size();
  gon::Int g = 0;
  std::vector<std::size_t> cols(m);
  for (std::size_t i = 0; i < m; ++i) cols[i] = i;
  for (;;) {
    std::vector<std::vector<gon::Int>> sub(m, std::vector<gon::Int>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) sub[i][j] = a[i][cols[j]];
    const gon::Int d = int_det(sub);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    std::size_t i = m;
    while (i > 0 && cols[i - 1] == n - m + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < m; ++j) cols[j] = cols[j - 1] + 1;
  }
  return g;
}

// det(A A^T) of an integer matrix.
inline gon::Int gram_det(const std::vector<std::vector<long>>& a) {
  const std::size_t m = a.size();
  std::vector<std::vector<gon::Int>> g(m, std::vector<gon::Int>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < a[0].size(); ++k) g[i][j] += a[i][k] * a[j][k];
  return int_det(g);
}

// Points of the cube [-t, t]^n in Z^n, by scanning a slightly larger box.
inline long cube_count(std::size_t n, long t) {
  long inside = 1;
  for (std::size_t i = 0; i < n; ++i) {
    long c = 0;
    for (long x = -t - 2; x <= t + 2; ++x) c += std::abs(x) <= t;
    inside *= c;
  }
  return inside;
}

}  // namespace oracle
