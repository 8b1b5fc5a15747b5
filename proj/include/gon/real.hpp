#pragma once

// Certified non-rational reals.
//
// QuadVal holds a nonnegative real through its rational square; it is closed
// under products and quotients.  Interval is a rational enclosure [lo, hi]
// used whenever sums of square roots or transcendental constants appear.
// Value is the tagged union reported by checks: exact where possible,
// enclosed otherwise.

#include "gon/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <variant>

namespace gon {

/// Default enclosure width exponent: intervals are refined to width <= 2^-64
/// unless a caller asks otherwise.
inline constexpr unsigned kDefaultPrecisionBits = 64;

/// Reads GON_PRECISION (a positive bit count) or returns the default.
unsigned precision_from_env();

/// Enclosure precision used when Value arithmetic has to leave exact
/// representations.  Thread-local; set it with PrecisionScope.
unsigned working_precision();

class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

struct Interval {
  Rat lo;
  Rat hi;

  Interval() = default;
  Interval(Rat lo_, Rat hi_);
  static Interval point(const Rat& x) { return Interval(x, x); }

  bool is_point() const { return lo == hi; }
  Rat width() const { return hi - lo; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
/// Requires 0 outside b.
Interval operator/(const Interval& a, const Interval& b);
Interval pow(const Interval& a, unsigned exponent);
Interval hull(const Interval& a, const Interval& b);

/// Certified order: less/greater when the enclosures are disjoint (or both
/// are equal points), nullopt when they overlap.
std::optional<std::strong_ordering> certified_compare(const Interval& a, const Interval& b);

/// Enclosure of sqrt(x), x >= 0, of width at most 2^-bits (exact point for
/// perfect squares).
Interval sqrt_enclosure(const Rat& x, unsigned bits);
Interval sqrt_enclosure(const Interval& x, unsigned bits);
/// Enclosure of x^(1/k), x >= 0, k >= 1, width <= 2^-bits.
Interval root_enclosure(const Rat& x, unsigned k, unsigned bits);
/// pi via Machin's formula with alternating-series remainders.
Interval pi_enclosure(unsigned bits);
/// Euler's number via the factorial series with its geometric tail bound.
Interval e_enclosure(unsigned bits);
/// Volume of the Euclidean unit ball in R^n.
Interval unit_ball_volume(unsigned n, unsigned bits);

/// Exact sqrt of a nonnegative rational when it is a perfect square.
std::optional<Rat> exact_sqrt(const Rat& x);

std::string to_string(const Interval& iv);

class QuadVal {
 public:
  QuadVal() = default;
  /// sqrt(square); square must be >= 0.
  static QuadVal from_square(Rat square);
  /// The nonnegative rational r itself.
  static QuadVal from_rational(const Rat& r);

  const Rat& square() const { return square_; }
  /// r such that r^2 = square, when that root is rational.
  std::optional<Rat> rational() const { return exact_sqrt(square_); }
  Interval enclose(unsigned bits) const { return sqrt_enclosure(square_, bits); }

  friend QuadVal operator*(const QuadVal& a, const QuadVal& b) { return from_square(a.square_ * b.square_); }
  friend QuadVal operator/(const QuadVal& a, const QuadVal& b);
  QuadVal pow(unsigned exponent) const { return from_square(gon::pow(square_, exponent)); }

  friend bool operator==(const QuadVal& a, const QuadVal& b) { return a.square_ == b.square_; }
  friend std::strong_ordering operator<=>(const QuadVal& a, const QuadVal& b) {
    return a.square_ < b.square_ ? std::strong_ordering::less
         : a.square_ > b.square_ ? std::strong_ordering::greater
                                 : std::strong_ordering::equal;
  }

 private:
  Rat square_ = 0;
};

/// "p/q" for rational roots, otherwise "sqrt(p/q)".
std::string to_string(const QuadVal& q);

class Value {
 public:
  using Repr = std::variant<Rat, QuadVal, Interval>;

  Value() : repr_(Rat(0)) {}
  Value(Rat r) : repr_(std::move(r)) {}
  Value(long v) : repr_(Rat(v)) {}
  Value(QuadVal q);
  Value(Interval iv);

  const Repr& repr() const { return repr_; }
  bool is_exact() const { return !std::holds_alternative<Interval>(repr_); }
  std::optional<Rat> rational() const;
  Interval enclose(unsigned bits) const;

 private:
  Repr repr_;
};

Value operator*(const Value& a, const Value& b);
Value operator/(const Value& a, const Value& b);
Value operator+(const Value& a, const Value& b);
Value operator-(const Value& a, const Value& b);
Value pow(const Value& a, unsigned exponent);

/// Exact comparison when both sides are exact, certified interval comparison
/// otherwise; nullopt means the enclosures at `bits` overlap.
std::optional<std::strong_ordering> compare(const Value& a, const Value& b, unsigned bits);

std::string to_string(const Value& v);

}  // namespace gon
