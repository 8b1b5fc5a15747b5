#include "gon/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace gon {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

std::string to_string(const Rat& r) { return r.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Int parse_int(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Int(digits, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(s, text));
  const Int num = parse_int(trim(s.substr(0, slash)), text);
  const Int den = parse_int(trim(s.substr(slash + 1)), text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return make_rat(num, den);
}

Int floor_int(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Int ceil_int(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

Rat pow(const Rat& base, unsigned exponent) {
  Rat result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

Int pow(const Int& base, unsigned exponent) {
  Int result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Int factorial(unsigned n) {
  Int result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Int binomial(unsigned n, unsigned k) {
  Int result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

Int gcd_all(std::span<const Int> values) {
  Int g = 0;
  for (const auto& v : values) g = gcd(g, v);
  return g;
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec scaled(std::span<const Rat> v, const Rat& t) {
  QVec out(v.begin(), v.end());
  for (auto& x : out) x *= t;
  return out;
}

QVec add(std::span<const Rat> a, std::span<const Rat> b) {
  QVec out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

QVec sub(std::span<const Rat> a, std::span<const Rat> b) {
  QVec out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

QVec to_qvec(std::span<const Int> v) {
  QVec out;
  out.reserve(v.size());
  for (const auto& z : v) out.emplace_back(z);
  return out;
}

bool is_zero(std::span<const Rat> v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

Rat max_abs(std::span<const Rat> v) {
  Rat m = 0;
  for (const auto& x : v) m = std::max<Rat>(m, abs(x));
  return m;
}

Int max_abs(std::span<const Int> v) {
  Int m = 0;
  for (const auto& x : v) m = std::max<Int>(m, abs(x));
  return m;
}

bool lex_less(std::span<const Rat> a, std::span<const Rat> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(std::span<const Rat> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace gon
