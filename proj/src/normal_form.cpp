#include "gon/normal_form.hpp"

#include <stdexcept>
#include <utility>

namespace gon {

namespace {

using IMat = std::vector<std::vector<Int>>;

IMat to_imat(const QMat& m) {
  if (!m.is_integer()) throw std::invalid_argument("integer matrix expected");
  IMat a(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).get_num();
  return a;
}

QMat to_qmat(const IMat& a, std::size_t cols) {
  QMat m(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = a[i][j];
  return m;
}

IMat identity(std::size_t n) {
  IMat a(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

bool all_zero(const IMat& a) {
  for (const auto& r : a)
    for (const auto& x : r)
      if (x != 0) return false;
  return true;
}

// (row_a, row_b) <- (s*a + t*b, x*a + y*b) with s*y - t*x = 1.
void combine_rows(std::vector<Int>& a, std::vector<Int>& b, const Int& s, const Int& t, const Int& x, const Int& y) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    const Int na = s * a[j] + t * b[j];
    const Int nb = x * a[j] + y * b[j];
    a[j] = na;
    b[j] = nb;
  }
}

void axpy_row(std::vector<Int>& dst, const std::vector<Int>& src, const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < dst.size(); ++j) dst[j] -= q * src[j];
}

Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

Int round_nearest(const Rat& x) { return floor_int(x + Rat(1, 2)); }

HermiteForm hnf(const QMat& m) {
  IMat a = to_imat(m);
  if (all_zero(a)) throw std::invalid_argument("hnf of the zero matrix");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IMat u = identity(rows);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Int s, t;
      const Int g = ext_gcd(a[r][c], a[i][c], s, t);
      const Int x = -a[i][c] / g;
      const Int y = a[r][c] / g;
      combine_rows(a[r], a[i], s, t, x, y);
      combine_rows(u[r], u[i], s, t, x, y);
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0) {
      for (auto& v : a[r]) v = -v;
      for (auto& v : u[r]) v = -v;
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Int q = floor_div(a[i][c], a[r][c]);
      axpy_row(a[i], a[r], q);
      axpy_row(u[i], u[r], q);
    }
    ++r;
  }
  return {to_qmat(a, cols), to_qmat(u, rows)};
}

SmithForm snf(const QMat& m) {
  IMat a = to_imat(m);
  if (all_zero(a)) throw std::invalid_argument("snf of the zero matrix");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IMat u = identity(rows);
  IMat vt = identity(cols);  // rows of vt are columns of v

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
    std::swap(vt[x], vt[y]);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (auto& row : a) row[dst] -= q * row[src];
    axpy_row(vt[dst], vt[src], q);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) goto finished;
      std::swap(a[t], a[pi]);
      std::swap(u[t], u[pi]);
      swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const Int q = floor_div(a[i][t], a[t][t]);
        axpy_row(a[i], a[t], q);
        axpy_row(u[i], u[t], q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        col_axpy(j, t, floor_div(a[t][j], a[t][t]));
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce the divisibility chain: fold an offending row into row t.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = 0; j < cols; ++j) a[t][j] += a[bad][j];
      for (std::size_t j = 0; j < rows; ++j) u[t][j] += u[bad][j];
    }
    if (a[t][t] < 0) {
      for (auto& v : a[t]) v = -v;
      for (auto& v : u[t]) v = -v;
    }
  }
finished:
  return {to_qmat(a, cols), to_qmat(u, rows), to_qmat(vt, cols).transpose()};
}

std::vector<Int> invariant_factors(const QMat& m) {
  const auto s = snf(m);
  std::vector<Int> out;
  for (std::size_t i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i)
    if (s.d(i, i) != 0) out.push_back(s.d(i, i).get_num());
  return out;
}

QMat lll_gram(const QMat& gram) {
  const std::size_t m = gram.rows();
  QMat u = QMat::identity(m);
  if (m < 2) return u;
  const Rat delta(3, 4);

  QMat g = gram;
  std::vector<std::vector<Rat>> mu(m, std::vector<Rat>(m));
  std::vector<Rat> d(m);
  auto gram_schmidt = [&] {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        Rat s = g(i, j);
        for (std::size_t k = 0; k < j; ++k) s -= mu[j][k] * mu[i][k] * d[k];
        mu[i][j] = s / d[j];
      }
      Rat s = g(i, i);
      for (std::size_t k = 0; k < i; ++k) s -= mu[i][k] * mu[i][k] * d[k];
      d[i] = s;
    }
  };
  gram_schmidt();
  std::size_t k = 1;
  while (k < m) {
    for (std::size_t jj = k; jj-- > 0;) {
      const Int q = round_nearest(mu[k][jj]);
      if (q == 0) continue;
      for (std::size_t i = 0; i < m; ++i) u(i, k) -= q * u(i, jj);
      g = u.transpose() * gram * u;
      gram_schmidt();
    }
    if (d[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * d[k - 1]) {
      ++k;
    } else {
      u.swap_columns(k, k - 1);
      g = u.transpose() * gram * u;
      gram_schmidt();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return u;
}

}  // namespace gon
