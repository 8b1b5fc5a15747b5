#include "gon/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace gon {

namespace {

thread_local unsigned working_bits = kDefaultPrecisionBits;

Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Rat dyadic(const Int& num, unsigned bits, const Int& den) {
  Int d = den;
  mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), bits);
  return make_rat(num, d);
}

// Partial sums of the alternating series for atan(1/m) bracket the limit.
Interval atan_inverse(unsigned long m, unsigned bits) {
  Rat sum = 0;
  Rat power = make_rat(1, static_cast<long>(m));
  const Rat m2 = Rat(m) * m;
  Rat threshold = 1;
  mpq_div_2exp(threshold.get_mpq_t(), threshold.get_mpq_t(), bits + 8);
  for (unsigned long j = 0;; ++j) {
    const Rat term = power / (2 * j + 1);
    const Rat next = (j % 2 == 0) ? Rat(sum + term) : Rat(sum - term);
    if (term < threshold) return Interval(std::min(sum, next), std::max(sum, next));
    sum = next;
    power /= m2;
  }
}

}  // namespace

unsigned precision_from_env() {
  if (const char* env = std::getenv("GON_PRECISION")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 4096) return static_cast<unsigned>(v);
  }
  return kDefaultPrecisionBits;
}

unsigned working_precision() { return working_bits; }

PrecisionScope::PrecisionScope(unsigned bits) : saved_(working_bits) { working_bits = bits; }
PrecisionScope::~PrecisionScope() { working_bits = saved_; }

Interval::Interval(Rat lo_, Rat hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo > hi) throw std::invalid_argument("interval with lo > hi");
}

Interval operator+(const Interval& a, const Interval& b) { return Interval(a.lo + b.lo, a.hi + b.hi); }
Interval operator-(const Interval& a, const Interval& b) { return Interval(a.lo - b.hi, a.hi - b.lo); }
Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval operator*(const Interval& a, const Interval& b) {
  const Rat p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return Interval(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains(0)) throw std::domain_error("interval division by an enclosure of zero");
  return a * Interval(1 / b.hi, 1 / b.lo);
}

Interval pow(const Interval& a, unsigned exponent) {
  Interval r = Interval::point(1);
  for (unsigned i = 0; i < exponent; ++i) r = r * a;
  return r;
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

std::optional<std::strong_ordering> certified_compare(const Interval& a, const Interval& b) {
  if (a.hi < b.lo) return std::strong_ordering::less;
  if (a.lo > b.hi) return std::strong_ordering::greater;
  if (a.is_point() && b.is_point() && a.lo == b.lo) return std::strong_ordering::equal;
  return std::nullopt;
}

std::optional<Rat> exact_sqrt(const Rat& x) {
  if (x < 0) return std::nullopt;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) return std::nullopt;
  return make_rat(isqrt(x.get_num()), isqrt(x.get_den()));
}

Interval sqrt_enclosure(const Rat& x, unsigned bits) {
  if (x < 0) throw std::domain_error("sqrt of a negative rational");
  if (auto r = exact_sqrt(x)) return Interval::point(*r);
  // sqrt(p/q) = sqrt(p*q)/q, scaled by 2^bits before the integer root.
  Int n = x.get_num() * x.get_den();
  mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), 2 * bits);
  const Int s = isqrt(n);
  return Interval(dyadic(s, bits, x.get_den()), dyadic(s + 1, bits, x.get_den()));
}

Interval sqrt_enclosure(const Interval& x, unsigned bits) {
  const Rat lo = std::max<Rat>(x.lo, 0);
  return Interval(sqrt_enclosure(lo, bits).lo, sqrt_enclosure(x.hi, bits).hi);
}

Interval root_enclosure(const Rat& x, unsigned k, unsigned bits) {
  if (x < 0 || k == 0) throw std::domain_error("root_enclosure needs x >= 0 and k >= 1");
  if (k == 1) return Interval::point(x);
  // x^(1/k) = (p * q^(k-1))^(1/k) / q.
  Int n = x.get_num() * pow(x.get_den(), k - 1);
  mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(k) * bits);
  Int s;
  const bool exact = mpz_root(s.get_mpz_t(), n.get_mpz_t(), k) != 0;
  const Rat lo = dyadic(s, bits, x.get_den());
  return exact ? Interval::point(lo) : Interval(lo, dyadic(s + 1, bits, x.get_den()));
}

Interval pi_enclosure(unsigned bits) {
  const Interval a = atan_inverse(5, bits + 6);
  const Interval b = atan_inverse(239, bits + 6);
  return Interval::point(16) * a - Interval::point(4) * b;
}

Interval e_enclosure(unsigned bits) {
  Rat sum = 0;
  Rat term = 1;  // 1/k!
  Rat threshold = 1;
  mpq_div_2exp(threshold.get_mpq_t(), threshold.get_mpq_t(), bits);
  for (unsigned long k = 0;; ++k) {
    sum += term;
    // Tail after index k is below term / k for k >= 1.
    if (k >= 1 && term / k < threshold) return Interval(sum, sum + term / k);
    term /= (k + 1);
  }
}

Interval unit_ball_volume(unsigned n, unsigned bits) {
  const Interval pi = pi_enclosure(bits + 4 * n + 8);
  const unsigned k = n / 2;
  if (n % 2 == 0) return pow(pi, k) * Interval::point(Rat(1) / Rat(factorial(k)));
  const Rat c = Rat(pow(Int(2), n) * factorial(k)) / Rat(factorial(n));
  return pow(pi, k) * Interval::point(c);
}

std::string to_string(const Interval& iv) {
  if (iv.is_point()) return to_string(iv.lo);
  return "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]";
}

QuadVal QuadVal::from_square(Rat square) {
  if (square < 0) throw std::domain_error("QuadVal with negative square");
  QuadVal q;
  q.square_ = std::move(square);
  return q;
}

QuadVal QuadVal::from_rational(const Rat& r) {
  if (r < 0) throw std::domain_error("QuadVal of a negative rational");
  return from_square(r * r);
}

QuadVal operator/(const QuadVal& a, const QuadVal& b) {
  if (b.square_ == 0) throw std::domain_error("QuadVal division by zero");
  return QuadVal::from_square(a.square_ / b.square_);
}

std::string to_string(const QuadVal& q) {
  if (auto r = q.rational()) return to_string(*r);
  return "sqrt(" + to_string(q.square()) + ")";
}

Value::Value(QuadVal q) {
  if (auto r = q.rational()) {
    repr_ = *r;
  } else {
    repr_ = std::move(q);
  }
}

Value::Value(Interval iv) {
  if (iv.is_point()) {
    repr_ = iv.lo;
  } else {
    repr_ = std::move(iv);
  }
}

std::optional<Rat> Value::rational() const {
  if (const auto* r = std::get_if<Rat>(&repr_)) return *r;
  return std::nullopt;
}

Interval Value::enclose(unsigned bits) const {
  return std::visit(
      [bits](const auto& v) -> Interval {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rat>) {
          return Interval::point(v);
        } else if constexpr (std::is_same_v<T, QuadVal>) {
          return v.enclose(bits);
        } else {
          return v;
        }
      },
      repr_);
}

namespace {

// Positive part of a Value as a QuadVal, when representable.
std::optional<QuadVal> as_quad(const Value& v) {
  if (const auto* r = std::get_if<Rat>(&v.repr())) {
    if (*r >= 0) return QuadVal::from_rational(*r);
    return std::nullopt;
  }
  if (const auto* q = std::get_if<QuadVal>(&v.repr())) return *q;
  return std::nullopt;
}

// Enough bits that products of a few enclosures stay well below the
// requested width.
unsigned arithmetic_bits() { return working_bits + 32; }

}  // namespace

Value operator*(const Value& a, const Value& b) {
  if (auto ra = a.rational(), rb = b.rational(); ra && rb) return Value(*ra * *rb);
  if (auto qa = as_quad(a), qb = as_quad(b); qa && qb) return Value(*qa * *qb);
  const unsigned bits = arithmetic_bits();
  return Value(a.enclose(bits) * b.enclose(bits));
}

Value operator/(const Value& a, const Value& b) {
  if (auto ra = a.rational(), rb = b.rational(); ra && rb) {
    if (*rb == 0) throw std::domain_error("division by zero");
    return Value(*ra / *rb);
  }
  if (auto qa = as_quad(a), qb = as_quad(b); qa && qb) return Value(*qa / *qb);
  const unsigned bits = arithmetic_bits();
  return Value(a.enclose(bits) / b.enclose(bits));
}

Value operator+(const Value& a, const Value& b) {
  if (auto ra = a.rational(), rb = b.rational(); ra && rb) return Value(*ra + *rb);
  const unsigned bits = arithmetic_bits();
  return Value(a.enclose(bits) + b.enclose(bits));
}

Value operator-(const Value& a, const Value& b) {
  if (auto ra = a.rational(), rb = b.rational(); ra && rb) return Value(*ra - *rb);
  if (auto qa = as_quad(a), qb = as_quad(b); qa && qb && *qa == *qb) return Value(Rat(0));
  const unsigned bits = arithmetic_bits();
  return Value(a.enclose(bits) - b.enclose(bits));
}

Value pow(const Value& a, unsigned exponent) {
  Value r(Rat(1));
  for (unsigned i = 0; i < exponent; ++i) r = r * a;
  return r;
}

std::optional<std::strong_ordering> compare(const Value& a, const Value& b, unsigned bits) {
  const auto ra = a.rational();
  const auto rb = b.rational();
  if (ra && rb) return three_way(*ra, *rb);
  const auto qa = as_quad(a);
  const auto qb = as_quad(b);
  if (a.is_exact() && b.is_exact()) {
    if (qa && qb) return *qa <=> *qb;
    // One side is a negative rational, the other a QuadVal (nonnegative).
    if (ra && *ra < 0) return std::strong_ordering::less;
    if (rb && *rb < 0) return std::strong_ordering::greater;
  }
  return certified_compare(a.enclose(bits), b.enclose(bits));
}

std::string to_string(const Value& v) {
  return std::visit([](const auto& x) { return to_string(x); }, v.repr());
}

}  // namespace gon
