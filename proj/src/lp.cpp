#include "gon/lp.hpp"

#include <stdexcept>

namespace gon {

namespace {

// Dense tableau for: maximize c^T y subject to T y = rhs, y >= 0, with a
// feasible starting basis.
class Tableau {
 public:
  Tableau(std::vector<QVec> rows, QVec rhs, std::vector<std::size_t> basis)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

  // Returns false when the objective is unbounded above.
  bool maximize(const QVec& cost, std::size_t usable_columns) {
    const std::size_t m = rows_.size();
    for (;;) {
      // Reduced costs r_j = c_j - c_B^T T_j.
      std::size_t entering = usable_columns;
      for (std::size_t j = 0; j < usable_columns; ++j) {
        if (is_basic(j)) continue;
        Rat r = cost[j];
        for (std::size_t i = 0; i < m; ++i) r -= cost[basis_[i]] * rows_[i][j];
        if (r > 0) {
          entering = j;
          break;
        }
      }
      if (entering == usable_columns) return true;

      std::size_t leaving = m;
      Rat best_ratio;
      for (std::size_t i = 0; i < m; ++i) {
        if (rows_[i][entering] <= 0) continue;
        const Rat ratio = rhs_[i] / rows_[i][entering];
        if (leaving == m || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving == m) return false;
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rat inv = 1 / rows_[r][c];
    for (auto& x : rows_[r]) x *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      const Rat f = rows_[i][c];
      for (std::size_t j = 0; j < rows_[i].size(); ++j) rows_[i][j] -= f * rows_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    basis_[r] = c;
  }

  bool is_basic(std::size_t j) const {
    for (auto b : basis_)
      if (b == j) return true;
    return false;
  }

  QVec solution(std::size_t columns) const {
    QVec y(columns);
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] < columns) y[basis_[i]] = rhs_[i];
    return y;
  }

  void drop_row(std::size_t i) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
  }

  std::vector<QVec>& rows() { return rows_; }
  std::vector<std::size_t>& basis() { return basis_; }

 private:
  std::vector<QVec> rows_;
  QVec rhs_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult lp_exact(std::span<const Halfspace> constraints, std::span<const Rat> objective, Sense sense) {
  const std::size_t n = objective.size();
  const std::size_t m = constraints.size();
  for (const auto& h : constraints)
    if (h.a.size() != n) throw std::invalid_argument("lp_exact: constraint dimension mismatch");

  // Columns: x+ (n), x- (n), slacks (m), artificials (one per negative rhs).
  std::size_t artificials = 0;
  for (const auto& h : constraints)
    if (h.b < 0) ++artificials;
  const std::size_t structural = 2 * n + m;
  const std::size_t total = structural + artificials;

  std::vector<QVec> rows(m, QVec(total));
  QVec rhs(m);
  std::vector<std::size_t> basis(m);
  std::size_t next_art = structural;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& h = constraints[i];
    const Rat sgn = h.b < 0 ? Rat(-1) : Rat(1);
    for (std::size_t j = 0; j < n; ++j) {
      rows[i][j] = sgn * h.a[j];
      rows[i][n + j] = -sgn * h.a[j];
    }
    rows[i][2 * n + i] = sgn;
    rhs[i] = sgn * h.b;
    if (h.b < 0) {
      rows[i][next_art] = 1;
      basis[i] = next_art++;
    } else {
      basis[i] = 2 * n + i;
    }
  }

  Tableau tab(std::move(rows), std::move(rhs), std::move(basis));
  if (artificials > 0) {
    QVec phase1(total);
    for (std::size_t j = structural; j < total; ++j) phase1[j] = -1;
    tab.maximize(phase1, total);
    const QVec y = tab.solution(total);
    for (std::size_t j = structural; j < total; ++j)
      if (y[j] != 0) return {LpStatus::infeasible, 0, {}};
    // Drive artificials (at level zero) out of the basis.
    for (std::size_t i = 0; i < tab.basis().size();) {
      if (tab.basis()[i] < structural) {
        ++i;
        continue;
      }
      std::size_t col = structural;
      for (std::size_t j = 0; j < structural; ++j)
        if (tab.rows()[i][j] != 0) {
          col = j;
          break;
        }
      if (col == structural) {
        tab.drop_row(i);
      } else {
        tab.pivot(i, col);
        ++i;
      }
    }
  }

  QVec cost(total);
  const Rat dir = sense == Sense::maximize ? Rat(1) : Rat(-1);
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = dir * objective[j];
    cost[n + j] = -dir * objective[j];
  }
  if (!tab.maximize(cost, structural)) return {LpStatus::unbounded, 0, {}};

  const QVec y = tab.solution(total);
  QVec x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = y[j] - y[n + j];
  return {LpStatus::optimal, dot(objective, x), std::move(x)};
}

bool lp_feasible(std::span<const Halfspace> constraints, std::size_t dim) {
  const QVec zero(dim);
  return lp_exact(constraints, zero, Sense::maximize).status != LpStatus::infeasible;
}

}  // namespace gon
