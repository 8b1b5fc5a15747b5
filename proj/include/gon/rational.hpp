#pragma once

// Arbitrary-precision integer and rational scalars.
//
// Every quantity in the toolkit that can be rational is carried as a GMP
// rational.  mpq_class keeps its value canonical (reduced, positive
// denominator) after every arithmetic operation; values built from a raw
// numerator/denominator pair go through make_rat(), which canonicalizes.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gon {

using Int = mpz_class;
using Rat = mpq_class;
using QVec = std::vector<Rat>;
using ZVec = std::vector<Int>;

Rat make_rat(const Int& num, const Int& den = 1);
Rat make_rat(long num, long den = 1);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

/// Accepts "p", "-p", "p/q" with optional surrounding whitespace.  A
/// zero denominator or trailing garbage throws std::invalid_argument.
Rat parse_rat(std::string_view text);

inline int sign(const Rat& r) { return sgn(r); }
inline int sign(const Int& z) { return sgn(z); }

inline std::strong_ordering three_way(const Rat& a, const Rat& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Int floor_int(const Rat& r);
Int ceil_int(const Rat& r);
bool is_integer(const Rat& r);

Rat pow(const Rat& base, unsigned exponent);
Int pow(const Int& base, unsigned exponent);
Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

/// gcd of a list of integers; gcd of the empty list (or all zeros) is 0.
Int gcd_all(std::span<const Int> values);

Rat dot(std::span<const Rat> a, std::span<const Rat> b);
QVec scaled(std::span<const Rat> v, const Rat& t);
QVec add(std::span<const Rat> a, std::span<const Rat> b);
QVec sub(std::span<const Rat> a, std::span<const Rat> b);
QVec to_qvec(std::span<const Int> v);
bool is_zero(std::span<const Rat> v);

/// Infinity norm.
Rat max_abs(std::span<const Rat> v);
Int max_abs(std::span<const Int> v);

/// Lexicographic order on rational vectors of equal length.
bool lex_less(std::span<const Rat> a, std::span<const Rat> b);

std::string to_string(std::span<const Rat> v);

}  // namespace gon
