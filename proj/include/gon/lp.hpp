#pragma once

#include "gon/rational.hpp"

#include <span>
#include <vector>

namespace gon {

/// The affine inequality <a, x> <= b.
struct Halfspace {
  QVec a;
  Rat b;

  bool satisfied_by(std::span<const Rat> x) const { return dot(a, x) <= b; }
  bool tight_at(std::span<const Rat> x) const { return dot(a, x) == b; }
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

enum class LpStatus { optimal, unbounded, infeasible };
enum class Sense { maximize, minimize };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rat value;   ///< optimum, when status == optimal
  QVec point;  ///< feasible point attaining it
};

/// Optimizes <objective, x> over {x : <a_i, x> <= b_i} with x free, exactly,
/// by a two-phase dense simplex with Bland's anti-cycling rule.
LpResult lp_exact(std::span<const Halfspace> constraints, std::span<const Rat> objective, Sense sense);

/// True iff the inequality system has a solution.
bool lp_feasible(std::span<const Halfspace> constraints, std::size_t dim);

}  // namespace gon
