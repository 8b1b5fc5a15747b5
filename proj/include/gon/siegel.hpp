#pragma once

// Small integer solutions of A x = 0 through successive minima of cube
// sections, the projected bodies K_α, and the constants c(n), s(n).

#include "gon/body.hpp"
#include "gon/lattice.hpp"
#include "gon/minima.hpp"

namespace gon {

struct SiegelSolution {
  std::vector<ZVec> vectors;  ///< witnesses of λ_1, ..., λ_{n-m}
  Int product_norm;           ///< Π ||x_i||_inf
  QuadVal bv_bound;           ///< sqrt(det(A A^T)) / gcd(A)
  Interval classical_bound;   ///< 1 + (n ||A||_inf)^{m/(n-m)}
  bool bv_certified = false;
  bool classical_certified = false;
};

/// Solves A x = 0 for an integer m x n matrix of rank m < n.  Throws
/// std::domain_error on rank deficiency or m >= n.
SiegelSolution siegel_solve(const QMat& a);

/// S(A) = C_n ∩ ker(A) together with Λ(A).  The section is charted on the
/// free coordinates: x_J = -C x_F with C = A_J^{-1} A_F.
struct CubeSection {
  Lattice lattice;
  std::vector<std::size_t> free_coords;
  Body chart;           ///< {y : ||y||_inf <= 1, ||C y||_inf <= 1}
  Rat volume_squared;   ///< vol_{n-m}(S(A))^2
  std::size_t dim() const { return chart.dim(); }
  /// vol_{n-m}(S(A)) >= 2^{n-m}.
  bool vaaler_holds() const;
};

CubeSection section_body(const QMat& a);

/// K_{α_1..α_{n-1}} with 0 < α_1 <= ... <= α_{n-1} <= 1.
class GeneralizedHexagon {
 public:
  /// Throws std::invalid_argument when the coefficients are out of order or
  /// outside (0, 1].
  explicit GeneralizedHexagon(QVec alphas);
  const QVec& alphas() const { return alphas_; }
  std::size_t dim() const { return alphas_.size(); }
  Body body() const { return generalized_hexagon(alphas_); }
  /// Every point of `inner` satisfies our constraints (checked on vertices).
  bool contains(const GeneralizedHexagon& inner) const;

 private:
  QVec alphas_;
};

/// K(a) = π(S(a)) for 0 < a_1 <= ... <= a_n: α_i = a_i / a_n.
GeneralizedHexagon project_body(const ZVec& a);

/// The smaller hexagon inside K_α: K_{1,1} in the plane, K_{β,1,1} with
/// β_i = α_i / α_{n-2} above it.  Needs at least two coefficients.
GeneralizedHexagon smaller_section(const GeneralizedHexagon& k);

/// Δ(K_{β,1,1}) for 0 < β <= 1.
Rat whitworth_delta(const Rat& beta);

/// Δ(K_{1,1}) = vol(K_{1,1}) / 4 with the volume computed.
Rat hexagon_delta2();

struct HexagonPacking {
  QMat basis;         ///< lattice Λ with 2Λ packing K_{1,1}
  Rat det;
  QuadVal first_minimum;
  bool translates_disjoint = false;  ///< neighbor scan of 2Λ + K_{1,1}
};

/// A critical lattice of K_{1,1}, verified.
HexagonPacking hexagon_packing();

/// Lower bound for Δ(K(a)) from the containments above, for n in {2, 3, 4}.
Rat projected_delta_lower(const ZVec& sorted_a);

/// σ_n = (2/π) ∫_0^∞ (sin t / t)^n dt.
Rat sinc_sigma(unsigned n);

struct ScanRecord {
  ZVec a;
  std::vector<Int> minima;  ///< λ_i(S(a), Λ(a)), integers for the cube
  Int product;
  Rat product_ratio;        ///< Π λ_i / ||a||_inf
  Rat single_ratio;         ///< λ_1^{n-1} / ||a||_inf
  bool bv_holds = false;    ///< (Π λ_i)^2 <= ||a||_2^2 / gcd^2
  Rat projected_bound;      ///< ||a||_inf / (gcd Δ_lower); 0 when n > 4
  bool projected_holds = false;
};

struct ScanReport {
  unsigned n = 0;
  long a_max = 0;
  bool dedupe = true;
  std::vector<ScanRecord> records;
  Rat empirical_s;
  Rat empirical_c;
  ZVec s_witness;
  ZVec c_witness;
  bool c_le_s_everywhere = false;
  bool bv_everywhere = false;
  bool projected_everywhere = false;
  bool below_sqrt_n = false;       ///< every product ratio <= sqrt(n)
  bool below_sigma_inverse = false;  ///< every product ratio <= 1/σ_n
  std::optional<Rat> known_s;      ///< 1, 4/3, 27/19 for n = 2, 3, 4
  bool strictly_below_known = false;  ///< <= for n = 2, where s(2) is attained
};

/// Guard on the number of vectors a scan may visit.
inline constexpr std::size_t kMaxScanVectors = 2'000'000;

/// Scans 0 < a_1 <= ... <= a_n <= A_max; with dedupe only gcd(a) = 1.
/// Deterministic: records are in lexicographic order of a for any jobs.
ScanReport scan_constants(unsigned n, long a_max, bool dedupe, int jobs = 0);
ScanReport scan_constants_serial(unsigned n, long a_max, bool dedupe);

ScanRecord scan_record(const ZVec& a);

}  // namespace gon
