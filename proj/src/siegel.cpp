#include "gon/siegel.hpp"

#include "gon/polytope.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gon {

namespace {

Int inf_norm(const QVec& x) {
  Int m = 0;
  for (const auto& v : x) m = std::max(m, Int(abs(v.get_num())));
  return m;
}

Int matrix_inf_norm(const QMat& a) {
  Rat m = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) m = std::max(m, max_abs(a.row(i)));
  return m.get_num();
}

void check_integer_full_rank(const QMat& a) {
  if (!a.is_integer()) throw std::invalid_argument("matrix must be integral");
  if (a.rows() >= a.cols()) throw std::domain_error("need fewer rows than columns");
  if (rank(a) != a.rows()) throw std::domain_error("matrix is rank deficient");
}

}  // namespace

SiegelSolution siegel_solve(const QMat& a) {
  check_integer_full_rank(a);
  const std::size_t m = a.rows(), n = a.cols(), d = n - m;
  const Lattice l = kernel_lattice(a);
  const auto mins = successive_minima(Body::cube(n), l, d);

  SiegelSolution s;
  s.product_norm = 1;
  for (const auto& w : mins.witnesses) {
    ZVec x;
    for (const auto& v : w) x.push_back(v.get_num());
    s.vectors.push_back(std::move(x));
    s.product_norm *= inf_norm(w);
  }
  const Int g = minors_gcd(a);
  const Rat gram = determinant(a * a.transpose());
  s.bv_bound = QuadVal::from_square(gram / Rat(g * g));
  s.bv_certified = Rat(s.product_norm * s.product_norm) <= s.bv_bound.square();

  // ||x_1|| < 1 + (n ||A||)^{m/d}  <=>  (||x_1|| - 1)^d < (n ||A||)^m.
  const Int base = pow(Int(Int(static_cast<long>(n)) * matrix_inf_norm(a)), static_cast<unsigned>(m));
  const Int first = inf_norm(mins.witnesses.front());
  s.classical_certified = pow(Int(first - 1), static_cast<unsigned>(d)) < base;
  s.classical_bound = Interval::point(1) + root_enclosure(Rat(base), static_cast<unsigned>(d), working_precision());
  return s;
}

bool CubeSection::vaaler_holds() const { return volume_squared >= pow(Rat(4), static_cast<unsigned>(dim())); }

CubeSection section_body(const QMat& a) {
  check_integer_full_rank(a);
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::size_t> pivots;
  for_each_subset(n, m, [&](const std::vector<std::size_t>& cs) {
    QMat sub(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) sub(i, j) = a(i, cs[j]);
    if (determinant(sub) == 0) return true;
    pivots = cs;
    return false;
  });
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j)
    if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free.push_back(j);

  QMat aj(m, m), af(m, free.size());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) aj(i, j) = a(i, pivots[j]);
    for (std::size_t j = 0; j < free.size(); ++j) af(i, j) = a(i, free[j]);
  }
  const QMat c = inverse(aj) * af;
  const std::size_t d = free.size();
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < d; ++i) {
    QVec e(d);
    e[i] = 1;
    hs.push_back({e, 1});
    hs.push_back({scaled(e, -1), 1});
  }
  for (std::size_t i = 0; i < m; ++i) {
    const QVec r = c.row(i);
    if (is_zero(r)) continue;
    hs.push_back({r, 1});
    hs.push_back({scaled(r, -1), 1});
  }
  Body chart = Body::hpoly(hs, d);
  QMat g = c.transpose() * c;
  for (std::size_t i = 0; i < d; ++i) g(i, i) += 1;
  const Rat v = *chart.exact_volume();
  return CubeSection{kernel_lattice(a), free, std::move(chart), v * v * determinant(g)};
}

GeneralizedHexagon::GeneralizedHexagon(QVec alphas) : alphas_(std::move(alphas)) {
  if (alphas_.empty()) throw std::invalid_argument("generalized hexagon needs a coefficient");
  for (std::size_t i = 0; i < alphas_.size(); ++i) {
    if (alphas_[i] <= 0 || alphas_[i] > 1) throw std::invalid_argument("coefficients must lie in (0, 1]");
    if (i > 0 && alphas_[i] < alphas_[i - 1]) throw std::invalid_argument("coefficients must be non-decreasing");
  }
}

bool GeneralizedHexagon::contains(const GeneralizedHexagon& inner) const {
  if (inner.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  const Body b = inner.body();
  for (const auto& v : b.polytope().vertices) {
    if (max_abs(v) > 1) return false;
    if (abs(dot(alphas_, v)) > 1) return false;
  }
  return true;
}

GeneralizedHexagon project_body(const ZVec& a) {
  if (a.size() < 2) throw std::invalid_argument("need at least two entries");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0) throw std::invalid_argument("entries must be positive");
    if (i > 0 && a[i] < a[i - 1]) throw std::invalid_argument("entries must be sorted");
  }
  QVec alphas;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) alphas.push_back(make_rat(a[i], a.back()));
  return GeneralizedHexagon(std::move(alphas));
}

GeneralizedHexagon smaller_section(const GeneralizedHexagon& k) {
  const QVec& al = k.alphas();
  const std::size_t d = al.size();
  if (d < 2) throw std::invalid_argument("need at least two coefficients");
  QVec beta(d, Rat(1));
  for (std::size_t i = 0; i + 2 < d; ++i) beta[i] = al[i] / al[d - 2];
  return GeneralizedHexagon(std::move(beta));
}

Rat whitworth_delta(const Rat& beta) {
  if (beta <= 0 || beta > 1) throw std::invalid_argument("beta must lie in (0, 1]");
  if (beta < Rat(1, 2)) return Rat(3, 4);
  return -(beta * beta + 3 * beta - 24 + 1 / beta) / 27;
}

Rat hexagon_delta2() {
  // K_{1,1} tiles the plane, so its density is 1 and Δ = vol / 2^2.
  return *generalized_hexagon(QVec{1, 1}).exact_volume() / 4;
}

HexagonPacking hexagon_packing() {
  const Body k = generalized_hexagon(QVec{1, 1});
  HexagonPacking p;
  p.basis = QMat::from_columns({QVec{1, Rat(-1, 2)}, QVec{Rat(1, 2), Rat(1, 2)}});
  p.det = determinant(p.basis);
  const Lattice l(p.basis);
  p.first_minimum = first_minimum(k, l).value;
  // K + 2u and K have disjoint interiors iff u is not interior to K.
  p.translates_disjoint = true;
  for (long i = -3; i <= 3; ++i)
    for (long j = -3; j <= 3; ++j) {
      if (i == 0 && j == 0) continue;
      const QVec u = l.point(ZVec{Int(i), Int(j)});
      if (k.contains_interior(u)) p.translates_disjoint = false;
    }
  return p;
}

Rat projected_delta_lower(const ZVec& sorted_a) {
  switch (sorted_a.size()) {
    case 2:
      return 1;
    case 3: {
      static const Rat d = hexagon_delta2();
      return d;
    }
    case 4:
      return whitworth_delta(smaller_section(project_body(sorted_a)).alphas()[0]);
    default:
      throw std::domain_error("no closed form for the critical determinant");
  }
}

Rat sinc_sigma(unsigned n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  Int sum = 0;
  for (unsigned k = 0; 2 * k < n; ++k) {
    const Int term = binomial(n, k) * pow(Int(static_cast<long>(n - 2 * k)), n - 1);
    sum += k % 2 == 0 ? term : Int(-term);
  }
  return make_rat(sum, pow(Int(2), n - 1) * factorial(n - 1));
}

ScanRecord scan_record(const ZVec& a) {
  const std::size_t n = a.size();
  ScanRecord r;
  r.a = a;
  QVec row(a.begin(), a.end());
  const QMat am = QMat::from_rows({row});
  const auto mins = successive_minima(Body::cube(n), kernel_lattice(am), n - 1);
  r.product = 1;
  for (const auto& v : mins.values) {
    r.minima.push_back(v.rational()->get_num());
    r.product *= r.minima.back();
  }
  const Int amax = max_abs(std::span<const Int>(a));
  const Int g = gcd_all(a);
  r.product_ratio = make_rat(r.product, amax);
  r.single_ratio = make_rat(pow(r.minima.front(), static_cast<unsigned>(n - 1)), amax);
  Int norm2 = 0;
  for (const auto& x : a) norm2 += x * x;
  r.bv_holds = Rat(r.product * r.product) <= make_rat(norm2, g * g);

  const bool sorted_positive = a.front() > 0 && std::is_sorted(a.begin(), a.end());
  if (sorted_positive && n <= 4) {
    r.projected_bound = Rat(amax) / (Rat(g) * projected_delta_lower(a));
    r.projected_holds = Rat(r.product) <= r.projected_bound;
  }
  return r;
}

namespace {

std::vector<ZVec> scan_domain(unsigned n, long a_max, bool dedupe) {
  if (n < 2) throw std::invalid_argument("scan needs n >= 2");
  if (a_max < 1) throw std::invalid_argument("scan needs A_max >= 1");
  // Non-decreasing vectors in [1, A_max]^n: C(A_max + n - 1, n).
  if (binomial(static_cast<unsigned>(a_max + n - 1), n) > kMaxScanVectors)
    throw std::length_error("scan exceeds the vector guard");
  std::vector<ZVec> out;
  std::vector<long> a(n, 1);
  for (;;) {
    ZVec z(a.begin(), a.end());
    if (!dedupe || gcd_all(z) == 1) out.push_back(std::move(z));
    std::size_t i = n;
    while (i > 0 && a[i - 1] == a_max) --i;
    if (i == 0) break;
    const long v = a[i - 1] + 1;
    for (std::size_t j = i - 1; j < n; ++j) a[j] = v;
  }
  return out;
}

ScanReport aggregate(unsigned n, long a_max, bool dedupe, std::vector<ScanRecord> records) {
  ScanReport rep;
  rep.n = n;
  rep.a_max = a_max;
  rep.dedupe = dedupe;
  rep.records = std::move(records);
  rep.c_le_s_everywhere = rep.bv_everywhere = rep.projected_everywhere = true;
  rep.below_sqrt_n = rep.below_sigma_inverse = true;
  const Rat sigma_inv = 1 / sinc_sigma(n);
  for (const auto& r : rep.records) {
    if (r.product_ratio > rep.empirical_s) {
      rep.empirical_s = r.product_ratio;
      rep.s_witness = r.a;
    }
    if (r.single_ratio > rep.empirical_c) {
      rep.empirical_c = r.single_ratio;
      rep.c_witness = r.a;
    }
    rep.c_le_s_everywhere = rep.c_le_s_everywhere && r.single_ratio <= r.product_ratio;
    rep.bv_everywhere = rep.bv_everywhere && r.bv_holds;
    if (n <= 4) rep.projected_everywhere = rep.projected_everywhere && r.projected_holds;
    rep.below_sqrt_n = rep.below_sqrt_n && r.product_ratio * r.product_ratio <= Rat(n);
    rep.below_sigma_inverse = rep.below_sigma_inverse && r.product_ratio <= sigma_inv;
  }
  if (n == 2) rep.known_s = Rat(1);
  if (n == 3) rep.known_s = Rat(4, 3);
  if (n == 4) rep.known_s = Rat(27, 19);
  if (rep.known_s) {
    // s(2) = 1 is attained (a = (1, 1)); for n = 3, 4 the supremum is not.
    rep.strictly_below_known = n == 2 ? rep.empirical_s <= 1 : rep.empirical_s < *rep.known_s;
  }
  return rep;
}

}  // namespace

ScanReport scan_constants_serial(unsigned n, long a_max, bool dedupe) {
  const auto domain = scan_domain(n, a_max, dedupe);
  std::vector<ScanRecord> records;
  records.reserve(domain.size());
  for (const auto& a : domain) records.push_back(scan_record(a));
  return aggregate(n, a_max, dedupe, std::move(records));
}

ScanReport scan_constants(unsigned n, long a_max, bool dedupe, int jobs) {
  const auto domain = scan_domain(n, a_max, dedupe);
  std::vector<ScanRecord> records(domain.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const long count = static_cast<long>(domain.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (long i = 0; i < count; ++i) records[static_cast<std::size_t>(i)] = scan_record(domain[static_cast<std::size_t>(i)]);
  return aggregate(n, a_max, dedupe, std::move(records));
}

}  // namespace gon
