#include "gon/verify.hpp"

#include "gon/counting.hpp"
#include "gon/minima.hpp"
#include "gon/siegel.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace gon {

std::string to_string(CheckKind k) {
  switch (k) {
    case CheckKind::theorem: return "theorem";
    case CheckKind::conjecture: return "conjecture";
    case CheckKind::bound: return "bound";
  }
  return "?";
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::equality: return "equality";
    case CheckStatus::violated: return "violated";
    case CheckStatus::counterexample_candidate: return "counterexample_candidate";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::undecided: return "undecided";
  }
  return "?";
}

const Comparison* CheckReport::decisive() const {
  const CheckStatus want = status == CheckStatus::counterexample_candidate ? CheckStatus::violated : status;
  for (const auto& p : parts)
    if (p.status == want) return &p;
  return parts.empty() ? nullptr : &parts.front();
}

std::optional<Value> CheckReport::margin() const {
  const Comparison* p = decisive();
  if (!p) return std::nullopt;
  return p->rhs - p->lhs;
}

namespace {

bool is_integer_lattice(const Lattice& l) {
  return l.full_rank() && l.basis().is_integer() && l.gram_det() == 1;
}

Value product(const std::vector<QuadVal>& v, std::size_t from, std::size_t to) {
  QuadVal p = QuadVal::from_rational(1);
  for (std::size_t i = from; i < to; ++i) p = p * v[i];
  return Value(p);
}

Value product(const std::vector<QuadVal>& v) { return product(v, 0, v.size()); }

/// floor(2/λ + 1) = isqrt(floor(4/λ^2)) + 1.
Int floor_two_over_plus_one(const QuadVal& lam) {
  const Int q = floor_int(Rat(4 / lam.square()));
  Int r;
  mpz_sqrt(r.get_mpz_t(), q.get_mpz_t());
  return r + 1;
}

Value two_over(const QuadVal& lam) { return Value(QuadVal::from_rational(2) / lam); }

Value rv(const Rat& r) { return Value(r); }

Rat fact(std::size_t n) { return Rat(factorial(static_cast<unsigned>(n))); }

Rat pow_n(long base, std::size_t e) { return pow(Rat(base), static_cast<unsigned>(e)); }

// Lazily computed quantities of one instance.
class Ctx {
 public:
  Ctx(const Body& k, const Lattice& l) : k(k), l(l), n(k.dim()) {
    if (!l.full_rank() || l.ambient_dim() != n) throw std::invalid_argument("lattice must be full rank in the body's space");
    det = *l.det().rational();
  }

  const Body& k;
  const Lattice& l;
  std::size_t n;
  Rat det;

  const Body& ks() {
    if (!ks_) ks_ = symmetrize(k);
    return *ks_;
  }
  const MinimaResult& lam_s() {
    if (!lam_s_) lam_s_ = successive_minima(ks(), l, n);
    return *lam_s_;
  }
  const MinimaResult& lam_star() {
    if (!lam_star_) lam_star_ = star_minima(k, l, n);
    return *lam_star_;
  }
  const Lattice& dual() {
    if (!dual_) dual_ = polar_lattice(l);
    return *dual_;
  }
  const Body& ks_polar() {
    if (!ks_polar_) ks_polar_ = polar_body(ks());
    return *ks_polar_;
  }
  const MinimaResult& lam_ks_polar() {
    if (!lam_ks_polar_) lam_ks_polar_ = successive_minima(ks_polar(), dual(), n);
    return *lam_ks_polar_;
  }
  const Body& k_polar() {
    if (!k_polar_) k_polar_ = polar_body(k);
    return *k_polar_;
  }
  const MinimaResult& lam_k_polar_star() {
    if (!lam_k_polar_star_) lam_k_polar_star_ = star_minima(k_polar(), dual(), n);
    return *lam_k_polar_star_;
  }
  const Int& count() {
    if (!count_) count_ = count_points(k, l);
    return *count_;
  }
  const Int& count_interior() {
    if (!count_int_) count_int_ = count_points(k, l, true);
    return *count_int_;
  }
  Value vol() { return k.volume(); }
  Value vol_polar() { return k_polar().volume(); }
  Value vol_ks_polar() { return ks_polar().volume(); }
  std::optional<Value> intrinsic_volume(std::size_t i) {
    if (k.kind() == BodyKind::box) return rv(intrinsic_volumes_box(k.box_sides())[i]);
    if (i == n) return vol();
    if (i + 1 == n && k.is_polytope()) return Value(surface_area(k, working_precision())) * rv(Rat(1, 2));
    return std::nullopt;
  }

 private:
  std::optional<Body> ks_, ks_polar_, k_polar_;
  std::optional<Lattice> dual_;
  std::optional<MinimaResult> lam_s_, lam_star_, lam_ks_polar_, lam_k_polar_star_;
  std::optional<Int> count_, count_int_;
};

void le(CheckReport& r, std::string label, Value lhs, Value rhs) {
  r.parts.push_back({std::move(label), std::move(lhs), std::move(rhs), false, CheckStatus::undecided});
}

void lt(CheckReport& r, std::string label, Value lhs, Value rhs) {
  r.parts.push_back({std::move(label), std::move(lhs), std::move(rhs), true, CheckStatus::undecided});
}

void finalize(CheckReport& r) {
  if (r.parts.empty()) return;
  bool violated = false, undecided = false, equality = false;
  for (auto& p : r.parts) {
    const auto o = compare(p.lhs, p.rhs, working_precision());
    if (!o) {
      p.status = CheckStatus::undecided;
    } else if (*o < 0) {
      p.status = CheckStatus::holds;
    } else if (*o == 0) {
      p.status = p.strict ? CheckStatus::violated : CheckStatus::equality;
    } else {
      p.status = CheckStatus::violated;
    }
    violated = violated || p.status == CheckStatus::violated;
    undecided = undecided || p.status == CheckStatus::undecided;
    equality = equality || p.status == CheckStatus::equality;
  }
  if (violated) {
    r.status = r.kind == CheckKind::conjecture ? CheckStatus::counterexample_candidate : CheckStatus::violated;
  } else if (undecided) {
    r.status = CheckStatus::undecided;
    r.reason = "enclosures overlap; rerun with a larger --precision";
  } else {
    r.status = equality ? CheckStatus::equality : CheckStatus::holds;
  }
}

using CheckFn = std::function<void(Ctx&, CheckReport&)>;

struct Entry {
  CheckInfo info;
  CheckFn fn;
};

bool require(CheckReport& r, bool ok, const char* reason) {
  if (!ok) r.reason = reason;
  return ok;
}

void section_only(Ctx&, CheckReport& r) { r.reason = "applies to cube sections S(A); use the section checks"; }

// Counting bounds with product of factors (1 ± c_i λ_i / 2).
void gv_like(Ctx& c, CheckReport& r, bool interior, bool weak) {
  const auto& lam = c.lam_s().values;
  const std::size_t n = c.n;
  const Value g = rv(Rat(interior ? c.count_interior() : c.count()));
  const Value ratio = g * rv(c.det) / c.vol();
  Value upper = rv(1), lower = rv(1);
  for (std::size_t i = 0; i < n; ++i) {
    const Value half = Value(lam[i]) * rv(make_rat(static_cast<long>(weak ? n : i + 1), 2));
    upper = upper * (rv(1) + half);
    lower = lower * (rv(1) - half);
  }
  le(r, "G det / vol <= prod (1 + c_i lambda_i / 2)", ratio, upper);
  // The lower bound assumes n lambda_n(K_s) <= 2.
  if (lam.back() * QuadVal::from_rational(Rat(static_cast<long>(n))) <= QuadVal::from_rational(2)) {
    le(r, "prod (1 - c_i lambda_i / 2) <= G det / vol", lower, ratio);
  } else {
    r.reason = "lower bound needs n lambda_n(K_s) <= 2";
  }
  r.witnesses = c.lam_s().witnesses;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e;
    auto add = [&](std::string id, CheckKind kind, std::string statement, std::string applies, CheckFn fn) {
      e.push_back({{std::move(id), kind, std::move(statement), std::move(applies)}, std::move(fn)});
    };
    const auto T = CheckKind::theorem, C = CheckKind::conjecture, B = CheckKind::bound;

    add("minkowski_first", T, "lambda_1(K_s)^n vol(K) <= 2^n det", "all", [](Ctx& c, CheckReport& r) {
      le(r, "lambda_1^n vol <= 2^n det", pow(Value(c.lam_s().values[0]), static_cast<unsigned>(c.n)) * c.vol(),
         rv(pow_n(2, c.n) * c.det));
      r.witnesses = {c.lam_s().witnesses[0]};
    });
    add("minkowski_upper", T, "prod lambda_i(K_s) vol(K) <= 2^n det", "all", [](Ctx& c, CheckReport& r) {
      le(r, "prod lambda_i vol <= 2^n det", product(c.lam_s().values) * c.vol(), rv(pow_n(2, c.n) * c.det));
      r.witnesses = c.lam_s().witnesses;
    });
    add("minkowski_lower", T, "2^n det / n! <= prod lambda_i(K_s) vol(K)", "all", [](Ctx& c, CheckReport& r) {
      le(r, "2^n det / n! <= prod lambda_i vol", rv(pow_n(2, c.n) * c.det / fact(c.n)), product(c.lam_s().values) * c.vol());
      r.witnesses = c.lam_s().witnesses;
    });
    add("centered_lower", T, "(n+1) det / n! <= prod lambda_i(K) vol(K)", "centered K", [](Ctx& c, CheckReport& r) {
      if (!require(r, c.k.is_centered(), "requires centered K")) return;
      le(r, "(n+1) det / n! <= prod lambda_i vol", rv(Rat(static_cast<long>(c.n + 1)) * c.det / fact(c.n)),
         product(c.lam_star().values) * c.vol());
      r.witnesses = c.lam_star().witnesses;
    });
    add("ehrhart_conj_instance", C, "vol(K) >= (n+1)^n det / n! implies a nonzero lattice point in K", "centered K",
        [](Ctx& c, CheckReport& r) {
          if (!require(r, c.k.is_centered(), "requires centered K")) return;
          const Value bound = rv(pow_n(static_cast<long>(c.n + 1), c.n) * c.det / fact(c.n));
          const auto o = compare(c.vol(), bound, working_precision());
          if (!o) {
            r.status = CheckStatus::undecided;
            r.reason = "cannot separate vol(K) from (n+1)^n det / n!";
          } else if (*o < 0) {
            r.status = CheckStatus::holds;
            r.reason = "vacuous: vol(K) < (n+1)^n det / n!";
          } else {
            le(r, "1 <= #(K ∩ Λ \\ {0})", rv(1), rv(Rat(c.count() - 1)));
          }
        });
    add("wills_lower", T, "2^i / i! <= lambda_1(K_s) ... lambda_i(K_s) V_i(K)", "Z^n; boxes all i, else i in {n-1, n}",
        [](Ctx& c, CheckReport& r) {
          if (!require(r, is_integer_lattice(c.l), "requires the integer lattice")) return;
          const auto& lam = c.lam_s().values;
          for (std::size_t i = 1; i <= c.n; ++i) {
            const auto v = c.intrinsic_volume(i);
            if (!v) continue;
            le(r, "i = " + std::to_string(i), rv(pow_n(2, i) / fact(i)), product(lam, 0, i) * *v);
          }
          r.witnesses = c.lam_s().witnesses;
        });
    add("henk_upper", T, "lambda_{i+1}(K_s) ... lambda_n(K_s) < 2^{n-i} V_i(K) / vol(K)",
        "Z^n; boxes all i, else i = n-1", [](Ctx& c, CheckReport& r) {
          if (!require(r, is_integer_lattice(c.l), "requires the integer lattice")) return;
          const auto& lam = c.lam_s().values;
          for (std::size_t i = 1; i < c.n; ++i) {
            const auto v = c.intrinsic_volume(i);
            if (!v) continue;
            lt(r, "i = " + std::to_string(i), product(lam, i, c.n), rv(pow_n(2, c.n - i)) * *v / c.vol());
          }
          if (r.parts.empty()) r.reason = "no computable intrinsic volume";
        });
    add("survol", T, "lambda_n(K_s) < S(K) / vol(K)", "Z^n, polytopes", [](Ctx& c, CheckReport& r) {
      if (!require(r, is_integer_lattice(c.l), "requires the integer lattice")) return;
      if (!require(r, c.k.is_polytope(), "surface area only for polytopes")) return;
      lt(r, "lambda_n < S / vol", Value(c.lam_s().values.back()), Value(surface_area(c.k, working_precision())) / c.vol());
    });
    add("hhh_surface", T, "2^n / (n-1)! <= sqrt(sum_i prod_{j != i} lambda_j^2) S(K)", "symmetric K, Z^n, polytopes",
        [](Ctx& c, CheckReport& r) {
          if (!require(r, c.k.is_symmetric(), "requires symmetric K")) return;
          if (!require(r, is_integer_lattice(c.l), "requires the integer lattice")) return;
          if (!require(r, c.k.is_polytope(), "surface area only for polytopes")) return;
          const auto& lam = c.lam_s().values;
          Rat sum = 0;
          for (std::size_t i = 0; i < c.n; ++i) {
            Rat p = 1;
            for (std::size_t j = 0; j < c.n; ++j)
              if (j != i) p *= lam[j].square();
            sum += p;
          }
          le(r, "2^n / (n-1)! <= sqrt(...) S", rv(pow_n(2, c.n) / fact(c.n - 1)),
             Value(QuadVal::from_square(sum)) * Value(surface_area(c.k, working_precision())));
        });
    add("mahler_bounds", B, "pi^n / n! <= vol(K) vol(K*) <= omega_n^2", "symmetric K", [](Ctx& c, CheckReport& r) {
      if (!require(r, c.k.is_symmetric(), "requires symmetric K")) return;
      const unsigned bits = working_precision();
      const Value vp = c.vol() * c.vol_polar();
      le(r, "pi^n / n! <= vol vol*", Value(pow(pi_enclosure(bits), static_cast<unsigned>(c.n))) / rv(fact(c.n)), vp);
      const Interval w = unit_ball_volume(static_cast<unsigned>(c.n), bits);
      le(r, "vol vol* <= omega_n^2", vp, Value(w * w));
    });
    add("mahler_conj", C, "4^n / n! <= vol(K) vol(K*)", "symmetric K", [](Ctx& c, CheckReport& r) {
      if (!require(r, c.k.is_symmetric(), "requires symmetric K")) return;
      le(r, "4^n / n! <= vol vol*", rv(pow_n(4, c.n) / fact(c.n)), c.vol() * c.vol_polar());
    });
    add("mahler_nonsym_conj", C, "(n+1)^{n+1} / (n!)^2 <= vol(K) vol(K*)", "centered K", [](Ctx& c, CheckReport& r) {
      if (!require(r, c.k.is_centered(), "requires centered K")) return;
      le(r, "(n+1)^{n+1} / (n!)^2 <= vol vol*", rv(pow_n(static_cast<long>(c.n + 1), c.n + 1) / (fact(c.n) * fact(c.n))),
         c.vol() * c.vol_polar());
    });
    add("mahler_minima_conj", C, "2^n det / n! prod lambda_i(K*, L*) <= vol(K)", "symmetric K", [](Ctx& c, CheckReport& r) {
      if (!require(r, c.k.is_symmetric(), "requires symmetric K")) return;
      le(r, "2^n det / n! prod lambda_i* <= vol", rv(pow_n(2, c.n) * c.det / fact(c.n)) * product(c.lam_ks_polar().values), c.vol());
      r.witnesses = c.lam_ks_polar().witnesses;
    });
    add("makai_conj", C, "(n+1) det / n! lambda_1(K_s*, L*)^n <= vol(K)", "all", [](Ctx& c, CheckReport& r) {
      le(r, "(n+1) det / n! lambda_1*^n <= vol",
         rv(Rat(static_cast<long>(c.n + 1)) * c.det / fact(c.n)) *
             pow(Value(c.lam_ks_polar().values[0]), static_cast<unsigned>(c.n)),
         c.vol());
      r.witnesses = {c.lam_ks_polar().witnesses[0]};
    });
    add("makai_strong", C, "(n+1) det / n! prod lambda_i(K_s*, L*) <= vol(K)", "all", [](Ctx& c, CheckReport& r) {
      le(r, "(n+1) det / n! prod lambda_i* <= vol",
         rv(Rat(static_cast<long>(c.n + 1)) * c.det / fact(c.n)) * product(c.lam_ks_polar().values), c.vol());
    });
    add("eggleston", T, "6 <= vol(K) vol(K_s*)", "n = 2", [](Ctx& c, CheckReport& r) {
      if (!require(r, c.n == 2, "planar bodies only")) return;
      le(r, "6 <= vol vol(K_s*)", rv(6), c.vol() * c.vol_ks_polar());
    });
    add("alvarez_conj", C, "(n+1) det / n! lambda_1(K*, L*)^n <= vol(K)", "origin in the interior", [](Ctx& c, CheckReport& r) {
      if (!require(r, c.k.has_origin_interior(), "requires the origin in the interior")) return;
      le(r, "(n+1) det / n! lambda_1(K*)^n <= vol",
         rv(Rat(static_cast<long>(c.n + 1)) * c.det / fact(c.n)) *
             pow(Value(c.lam_k_polar_star().values[0]), static_cast<unsigned>(c.n)),
         c.vol());
      r.witnesses = {c.lam_k_polar_star().witnesses[0]};
    });
    add("transference", T, "1 <= lambda_i(K, L) lambda_{n+1-i}(K*, L*) <= n!", "symmetric K", [](Ctx& c, CheckReport& r) {
      if (!require(r, c.k.is_symmetric(), "requires symmetric K")) return;
      const auto& a = c.lam_s().values;
      const auto& b = c.lam_ks_polar().values;
      for (std::size_t i = 0; i < c.n; ++i) {
        const Value p = Value(a[i] * b[c.n - 1 - i]);
        le(r, "i = " + std::to_string(i + 1) + " lower", rv(1), p);
        le(r, "i = " + std::to_string(i + 1) + " upper", p, rv(fact(c.n)));
      }
    });
    add("hx_upper", T, "vol(K) <= 2^n det prod lambda_i(K_s*, L*)", "all", [](Ctx& c, CheckReport& r) {
      le(r, "vol <= 2^n det prod lambda_i*", c.vol(), rv(pow_n(2, c.n) * c.det) * product(c.lam_ks_polar().values));
    });
    add("hx_centered_upper", T, "vol(K) <= (n+1)^n det / n! prod lambda_i(K_s*, L*)", "centered K", [](Ctx& c, CheckReport& r) {
      if (!require(r, c.k.is_centered(), "requires centered K")) return;
      le(r, "vol <= (n+1)^n det / n! prod lambda_i*", c.vol(),
         rv(pow_n(static_cast<long>(c.n + 1), c.n) * c.det / fact(c.n)) * product(c.lam_ks_polar().values));
    });
    add("minkowski_3n", T, "G(K) >= 3^n + 1 implies a nonzero interior lattice point", "symmetric K", [](Ctx& c, CheckReport& r) {
      if (!require(r, c.k.is_symmetric(), "requires symmetric K")) return;
      if (c.count_interior() > 1) {
        r.status = CheckStatus::holds;
        r.reason = "vacuous: K has a nonzero interior lattice point";
        return;
      }
      le(r, "G(K) <= 3^n", rv(Rat(c.count())), rv(pow_n(3, c.n)));
    });
    add("bhw_upper", T, "G(K) <= floor(2 / lambda_1(K_s) + 1)^n", "all", [](Ctx& c, CheckReport& r) {
      const Int f = floor_two_over_plus_one(c.lam_s().values[0]);
      le(r, "G <= floor(2/lambda_1 + 1)^n", rv(Rat(c.count())), rv(Rat(pow(f, static_cast<unsigned>(c.n)))));
    });
    add("bhw_conj", C, "G(K) <= prod floor(2 / lambda_i(K_s) + 1)", "all", [](Ctx& c, CheckReport& r) {
      Int p = 1;
      for (const auto& lam : c.lam_s().values) p *= floor_two_over_plus_one(lam);
      le(r, "G <= prod floor(2/lambda_i + 1)", rv(Rat(c.count())), rv(Rat(p)));
    });
    add("bhw_lower", T, "prod (2 / lambda_i - 1) / n! <= G(K)", "symmetric K with lambda_n <= 2", [](Ctx& c, CheckReport& r) {
      if (!require(r, c.k.is_symmetric(), "requires symmetric K")) return;
      const auto& lam = c.lam_s().values;
      if (!require(r, lam.back() <= QuadVal::from_rational(2), "requires lambda_n <= 2")) return;
      Value p = rv(Rat(1 / fact(c.n)));
      for (const auto& x : lam) p = p * (two_over(x) - rv(1));
      le(r, "prod (2/lambda_i - 1) / n! <= G", p, rv(Rat(c.count())));
    });
    add("malikiosis_bound", B, "G(K) <= (4/e) c^{n-1} prod floor(2 / lambda_i(K_s) + 1), c = sqrt(3) or (40/9)^{1/3}", "all",
        [](Ctx& c, CheckReport& r) {
          const unsigned bits = working_precision();
          Int p = 1;
          for (const auto& lam : c.lam_s().values) p *= floor_two_over_plus_one(lam);
          const Interval base = c.k.is_symmetric() ? root_enclosure(Rat(40, 9), 3, bits) : sqrt_enclosure(Rat(3), bits);
          const Value rhs = Value(Interval::point(4) / e_enclosure(bits)) *
                            Value(pow(base, static_cast<unsigned>(c.n - 1))) * rv(Rat(p));
          le(r, "G <= (4/e) c^{n-1} prod floor(...)", rv(Rat(c.count())), rhs);
        });
    add("tointon_bound", B, "G(K) <= (1 + lambda_k / 2) prod_{j <= k} 2 / lambda_j", "origin in the interior, k >= 1",
        [](Ctx& c, CheckReport& r) {
          if (!require(r, c.k.has_origin_interior(), "requires the origin in the interior")) return;
          const bool sym = c.k.is_symmetric();
          const auto& lam = sym ? c.lam_s().values : c.lam_star().values;
          const QuadVal threshold = QuadVal::from_rational(sym ? 1 : 2);
          std::size_t k = 0;
          while (k < lam.size() && lam[k] <= threshold) ++k;
          if (!require(r, k > 0, "no lambda_j below the threshold (k = 0)")) return;
          Value rhs = rv(1) + Value(lam[k - 1]) * rv(Rat(1, 2));
          for (std::size_t j = 0; j < k; ++j) rhs = rhs * two_over(lam[j]);
          le(r, "G <= (1 + lambda_k/2) prod 2/lambda_j, k = " + std::to_string(k), rv(Rat(c.count())), rhs);
        });
    add("gv_conj", C, "prod (1 - i lambda_i / 2) <= G(K) det / vol(K) <= prod (1 + i lambda_i / 2)", "all",
        [](Ctx& c, CheckReport& r) { gv_like(c, r, false, false); });
    add("gv_conj_interior", C, "the same with G(int K)", "all", [](Ctx& c, CheckReport& r) { gv_like(c, r, true, false); });
    add("freyer_lucas", T, "prod (1 - n lambda_i / 2) <= G(K) det / vol(K) <= prod (1 + n lambda_i / 2); G(K) <= prod (2 / lambda_i + n)",
        "all", [](Ctx& c, CheckReport& r) {
          gv_like(c, r, false, true);
          Value p = rv(1);
          for (const auto& lam : c.lam_s().values) p = p * (two_over(lam) + rv(Rat(static_cast<long>(c.n))));
          le(r, "G <= prod (2/lambda_i + n)", rv(Rat(c.count())), p);
        });
    add("discrete_volsur", T, "G_{n-1}(P) / G_n(P) <= (1/2) sum lambda_i(P)", "symmetric lattice polytopes",
        [](Ctx& c, CheckReport& r) {
          if (!require(r, c.k.is_symmetric() && c.k.is_polytope(), "requires a symmetric polytope")) return;
          const auto& vs = c.k.polytope().vertices;
          const bool lattice_polytope =
              std::all_of(vs.begin(), vs.end(), [&](const QVec& v) { return contains(c.l, v); });
          if (!require(r, lattice_polytope, "requires a lattice polytope")) return;
          const Rat ratio = ehrhart_codim1(c.k, c.l) * c.det / *c.k.exact_volume();
          Value sum = rv(0);
          for (const auto& lam : c.lam_s().values) sum = sum + Value(lam);
          le(r, "G_{n-1} / G_n <= sum lambda_i / 2", rv(ratio), sum * rv(Rat(1, 2)));
        });
    add("vaaler_section", T, "vol_{n-m}(S(A)) >= 2^{n-m}", "cube sections", section_only);
    add("siegel_bv", T, "prod ||x_i||_inf <= sqrt(det(A A^T)) / gcd(A); ||x_1||_inf < 1 + (n ||A||)^{m/(n-m)}",
        "cube sections", section_only);
    return e;
  }();
  return entries;
}

CheckReport evaluate(const Entry& entry, Ctx& ctx) {
  const unsigned base = working_precision();
  CheckReport r;
  for (unsigned bits = base; bits <= base * 16; bits *= 4) {
    PrecisionScope scope(bits);
    r = CheckReport{};
    r.check_id = entry.info.id;
    r.kind = entry.info.kind;
    r.bits = bits;
    try {
      entry.fn(ctx, r);
      finalize(r);
    } catch (const std::exception& ex) {
      r.parts.clear();
      r.status = CheckStatus::skipped;
      r.reason = std::string("error: ") + ex.what();
    }
    if (r.status != CheckStatus::undecided) break;
  }
  return r;
}

}  // namespace

const std::vector<CheckInfo>& list_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

std::vector<CheckReport> run_checks(const Body& k, const Lattice& l, const std::vector<std::string>& selection) {
  for (const auto& id : selection) {
    const auto& reg = registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const Entry& e) { return e.info.id == id; }))
      throw std::invalid_argument("unknown check id: " + id);
  }
  Ctx ctx(k, l);
  std::vector<CheckReport> out;
  for (const auto& e : registry()) {
    if (!selection.empty() && std::find(selection.begin(), selection.end(), e.info.id) == selection.end()) continue;
    out.push_back(evaluate(e, ctx));
  }
  return out;
}

std::vector<CheckReport> run_section_checks(const QMat& a) {
  const std::size_t m = a.rows(), n = a.cols(), d = n - m;
  std::vector<CheckReport> out;

  CheckReport v;
  v.check_id = "vaaler_section";
  v.kind = CheckKind::theorem;
  v.bits = working_precision();
  const auto sec = section_body(a);
  le(v, "4^{n-m} <= vol_{n-m}(S(A))^2", rv(pow_n(4, d)), rv(sec.volume_squared));
  finalize(v);
  out.push_back(std::move(v));

  CheckReport s;
  s.check_id = "siegel_bv";
  s.kind = CheckKind::theorem;
  s.bits = working_precision();
  const auto sol = siegel_solve(a);
  le(s, "(prod ||x_i||)^2 <= det(A A^T) / gcd(A)^2", rv(Rat(sol.product_norm * sol.product_norm)), rv(sol.bv_bound.square()));
  Rat amax = 0;
  for (std::size_t i = 0; i < m; ++i) amax = std::max(amax, max_abs(a.row(i)));
  Int first = 0;
  for (const auto& x : sol.vectors.front()) first = std::max(first, Int(abs(x)));
  lt(s, "(||x_1|| - 1)^{n-m} < (n ||A||)^m", rv(pow(Rat(Int(first - 1)), static_cast<unsigned>(d))),
     rv(pow(Rat(static_cast<long>(n)) * amax, static_cast<unsigned>(m))));
  for (const auto& x : sol.vectors) s.witnesses.push_back(to_qvec(x));
  finalize(s);
  out.push_back(std::move(s));
  return out;
}

namespace {

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

Lattice random_lattice(std::mt19937_64& rng, std::size_t n) {
  if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) return Lattice::integer(n);
  std::uniform_int_distribution<long> dg(1, 3);
  std::vector<Rat> diag(n);
  for (auto& x : diag) x = dg(rng);
  return Lattice(random_unimodular(rng, n) * QMat::diagonal(diag));
}

Body random_box(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(1, 6);
  QVec a(n);
  for (auto& x : a) x = make_rat(d(rng), 2);
  std::sort(a.begin(), a.end(), [](const Rat& x, const Rat& y) { return x > y; });
  return Body::box(a);
}

Body random_symmetric_hpoly(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(-3, 3);
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < n; ++i) {
    QVec a(n);
    a[i] = 1;
    const Rat b(1 + std::abs(d(rng)));
    hs.push_back({a, b});
    hs.push_back({scaled(a, -1), b});
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

Body random_hexagon(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(1, 6);
  QVec al(n);
  for (auto& x : al) x = make_rat(d(rng), 6);
  std::sort(al.begin(), al.end());
  return generalized_hexagon(al);
}

std::pair<std::string, Body> random_symmetric_body(std::mt19937_64& rng, std::size_t n) {
  static const Rat cube_scales[] = {Rat(1, 2), 1, Rat(3, 2), 2};
  static const Rat cross_scales[] = {1, Rat(3, 2), 2, 3};
  std::uniform_int_distribution<int> pick(0, 3);
  switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
    case 0: return {"box", random_box(rng, n)};
    case 1: return {"symmetric_hpoly", random_symmetric_hpoly(rng, n)};
    case 2: return {"cube", Body::cube(n, cube_scales[pick(rng)])};
    case 3: return {"cross", Body::cross(n, cross_scales[pick(rng)])};
    default: return {"hexagon", random_hexagon(rng, n)};
  }
}

}  // namespace

Instance random_instance(std::mt19937_64& rng, std::size_t n) {
  const int t = std::uniform_int_distribution<int>(0, 6)(rng);
  if (t == 5) return {"simplex", centered_simplex(n), random_lattice(rng, n)};
  if (t == 6) return {"dual_simplex", dual_centered_simplex(n), random_lattice(rng, n)};
  auto [label, body] = random_symmetric_body(rng, n);
  return {label, std::move(body), random_lattice(rng, n)};
}

Instance random_symmetric_instance(std::mt19937_64& rng, std::size_t n) {
  auto [label, body] = random_symmetric_body(rng, n);
  return {label, std::move(body), random_lattice(rng, n)};
}

QMat random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  for (;;) {
    QMat a(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
    if (rank(a) == m) return a;
  }
}

std::vector<Instance> fixed_instances() {
  std::vector<Instance> out;
  for (std::size_t n = 2; n <= 4; ++n) {
    const std::string s = std::to_string(n);
    out.push_back({"cube_" + s, Body::cube(n), Lattice::integer(n)});
    out.push_back({"cross_" + s, Body::cross(n), Lattice::integer(n)});
    out.push_back({"simplex_" + s, centered_simplex(n), Lattice::integer(n)});
    out.push_back({"dual_simplex_" + s, dual_centered_simplex(n), Lattice::integer(n)});
  }
  out.push_back({"cube_2_dilate_2", Body::cube(2, 2), Lattice::integer(2)});
  out.push_back({"hexagon_1_1", generalized_hexagon(QVec{1, 1}), Lattice::integer(2)});
  out.push_back({"box_3_2_1", Body::box(QVec{3, 2, 1}), Lattice::integer(3)});
  out.push_back({"disc", Body::ellipsoid(QMat::identity(2)), Lattice::integer(2)});
  return out;
}

namespace {

struct Plan {
  std::vector<Instance> instances;
  std::vector<QMat> matrices;
};

Plan make_plan(const CorpusOptions& o) {
  Plan p;
  p.instances = fixed_instances();
  std::mt19937_64 rng(o.seed);
  const std::size_t lo = std::min<std::size_t>(2, o.max_dim);
  std::uniform_int_distribution<std::size_t> dn(lo, o.max_dim);
  for (std::size_t i = 0; i < o.random_instances; ++i) {
    auto inst = random_instance(rng, dn(rng));
    inst.label = "random_" + std::to_string(i) + ":" + inst.label;
    p.instances.push_back(std::move(inst));
  }
  std::uniform_int_distribution<std::size_t> dm(2, 6);
  for (std::size_t i = 0; i < o.section_matrices; ++i) {
    const std::size_t n = dm(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
    p.matrices.push_back(random_matrix(rng, m, n, 9));
  }
  return p;
}

CorpusReport assemble(const CorpusOptions& o, Plan plan, std::vector<std::vector<CheckReport>> inst_reports,
                      std::vector<std::string> errors, std::vector<std::vector<CheckReport>> sec_reports) {
  CorpusReport rep;
  rep.seed = o.seed;
  for (std::size_t i = 0; i < plan.instances.size(); ++i)
    rep.instances.push_back({std::move(plan.instances[i]), std::move(inst_reports[i]), std::move(errors[i])});
  for (std::size_t i = 0; i < plan.matrices.size(); ++i)
    rep.sections.push_back({std::move(plan.matrices[i]), std::move(sec_reports[i])});
  auto tally = [&](const std::vector<CheckReport>& rs) {
    for (const auto& r : rs) {
      if (r.status == CheckStatus::violated) ++rep.violations;
      if (r.status == CheckStatus::counterexample_candidate) ++rep.candidates;
    }
  };
  for (const auto& i : rep.instances) tally(i.reports);
  for (const auto& s : rep.sections) tally(s.reports);
  return rep;
}

void evaluate_instance(const Instance& inst, std::vector<CheckReport>& out, std::string& error) {
  try {
    out = run_checks(inst.body, inst.lattice);
  } catch (const std::exception& ex) {
    error = ex.what();
  }
}

}  // namespace

CorpusReport run_corpus_serial(const CorpusOptions& opts) {
  Plan plan = make_plan(opts);
  std::vector<std::vector<CheckReport>> ir(plan.instances.size()), sr(plan.matrices.size());
  std::vector<std::string> errors(plan.instances.size());
  for (std::size_t i = 0; i < plan.instances.size(); ++i) evaluate_instance(plan.instances[i], ir[i], errors[i]);
  for (std::size_t i = 0; i < plan.matrices.size(); ++i) sr[i] = run_section_checks(plan.matrices[i]);
  return assemble(opts, std::move(plan), std::move(ir), std::move(errors), std::move(sr));
}

CorpusReport run_corpus(const CorpusOptions& opts) {
  Plan plan = make_plan(opts);
  std::vector<std::vector<CheckReport>> ir(plan.instances.size()), sr(plan.matrices.size());
  std::vector<std::string> errors(plan.instances.size());
  const unsigned bits = working_precision();
  const int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
  const long ni = static_cast<long>(plan.instances.size()), nm = static_cast<long>(plan.matrices.size());
#pragma omp parallel num_threads(threads)
  {
    PrecisionScope scope(bits);
#pragma omp for schedule(dynamic, 1) nowait
    for (long i = 0; i < ni; ++i) {
      const auto u = static_cast<std::size_t>(i);
      evaluate_instance(plan.instances[u], ir[u], errors[u]);
    }
#pragma omp for schedule(dynamic, 1)
    for (long i = 0; i < nm; ++i) sr[static_cast<std::size_t>(i)] = run_section_checks(plan.matrices[static_cast<std::size_t>(i)]);
  }
  return assemble(opts, std::move(plan), std::move(ir), std::move(errors), std::move(sr));
}

}  // namespace gon
