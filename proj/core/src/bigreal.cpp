#include "galperin/bigreal.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>

#include "galperin/errors.hpp"

namespace galperin {
namespace {

mpz_class shl(const mpz_class& v, unsigned k) {
  mpz_class r;
  mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), k);
  return r;
}

mpz_class floor_shr(const mpz_class& v, unsigned k) {
  mpz_class r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), k);
  return r;
}

mpz_class ceil_shr(const mpz_class& v, unsigned k) {
  mpz_class r;
  mpz_cdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), k);
  return r;
}

mpz_class floor_div(const mpz_class& n, const mpz_class& d) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}

mpz_class ceil_div(const mpz_class& n, const mpz_class& d) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}

mpz_class pow2(unsigned k) { return shl(mpz_class(1), k); }

// Both operands rescaled (exactly) to the larger precision.
std::pair<BigReal, BigReal> aligned(const BigReal& a, const BigReal& b) {
  const unsigned bits = std::max(a.bits(), b.bits());
  return {a.with_bits(bits), b.with_bits(bits)};
}

}  // namespace

BigReal BigReal::exact(const mpz_class& value, unsigned bits) {
  mpz_class s = shl(value, bits);
  return BigReal(s, s, bits);
}

BigReal BigReal::enclose(const mpq_class& value, unsigned bits) { return enclose(value, value, bits); }

BigReal BigReal::enclose(const mpq_class& lo, const mpq_class& hi, unsigned bits) {
  if (lo > hi) throw DomainError("BigReal: lower bound exceeds upper bound");
  return BigReal(floor_div(shl(lo.get_num(), bits), lo.get_den()),
                 ceil_div(shl(hi.get_num(), bits), hi.get_den()), bits);
}

BigReal BigReal::from_scaled(mpz_class lo, mpz_class hi, unsigned bits) {
  if (lo > hi) throw DomainError("BigReal: lower bound exceeds upper bound");
  return BigReal(std::move(lo), std::move(hi), bits);
}

mpq_class BigReal::lower() const {
  mpq_class q(lo_, pow2(bits_));
  q.canonicalize();
  return q;
}

mpq_class BigReal::upper() const {
  mpq_class q(hi_, pow2(bits_));
  q.canonicalize();
  return q;
}

mpq_class BigReal::width() const {
  mpq_class q(hi_ - lo_, pow2(bits_));
  q.canonicalize();
  return q;
}

double BigReal::lower_double() const { return lower().get_d(); }
double BigReal::upper_double() const { return upper().get_d(); }
double BigReal::mid_double() const {
  mpq_class q(lo_ + hi_, pow2(bits_ + 1));
  q.canonicalize();
  return q.get_d();
}

bool BigReal::contains(const mpq_class& value) const { return lower() <= value && value <= upper(); }

bool BigReal::contains(const BigReal& other) const {
  auto [a, b] = aligned(*this, other);
  return a.lo_ <= b.lo_ && b.hi_ <= a.hi_;
}

bool BigReal::overlaps(const BigReal& other) const {
  auto [a, b] = aligned(*this, other);
  return a.lo_ <= b.hi_ && b.lo_ <= a.hi_;
}

BigReal BigReal::with_bits(unsigned bits) const {
  if (bits == bits_) return *this;
  if (bits > bits_) return BigReal(shl(lo_, bits - bits_), shl(hi_, bits - bits_), bits);
  return BigReal(floor_shr(lo_, bits_ - bits), ceil_shr(hi_, bits_ - bits), bits);
}

std::optional<mpz_class> BigReal::certain_floor() const {
  mpz_class f_lo = floor_shr(lo_, bits_);
  if (f_lo != floor_shr(hi_, bits_)) return std::nullopt;
  return f_lo;
}

std::optional<mpz_class> BigReal::floor_if_strictly_inside() const {
  auto f = certain_floor();
  if (!f || shl(*f, bits_) == lo_) return std::nullopt;
  return f;
}

BigReal BigReal::operator-() const { return BigReal(-hi_, -lo_, bits_); }

BigReal operator+(const BigReal& a, const BigReal& b) {
  auto [x, y] = aligned(a, b);
  return BigReal(x.lo_ + y.lo_, x.hi_ + y.hi_, x.bits_);
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  auto [x, y] = aligned(a, b);
  return BigReal(x.lo_ - y.hi_, x.hi_ - y.lo_, x.bits_);
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  auto [x, y] = aligned(a, b);
  std::array<mpz_class, 4> p = {x.lo_ * y.lo_, x.lo_ * y.hi_, x.hi_ * y.lo_, x.hi_ * y.hi_};
  auto [mn, mx] = std::minmax_element(p.begin(), p.end());
  return BigReal(floor_shr(*mn, x.bits_), ceil_shr(*mx, x.bits_), x.bits_);
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  auto [x, y] = aligned(a, b);
  if (sgn(y.lo_) <= 0 && sgn(y.hi_) >= 0) throw DomainError("BigReal: division by an interval containing zero");
  const unsigned bits = x.bits_;
  mpz_class lo, hi;
  bool first = true;
  for (const mpz_class* n : {&x.lo_, &x.hi_}) {
    for (const mpz_class* d : {&y.lo_, &y.hi_}) {
      mpz_class scaled = shl(*n, bits);
      mpz_class f = floor_div(scaled, *d);
      mpz_class c = ceil_div(scaled, *d);
      if (first || f < lo) lo = f;
      if (first || c > hi) hi = c;
      first = false;
    }
  }
  return BigReal(lo, hi, bits);
}

BigReal operator*(const BigReal& a, long k) {
  if (k >= 0) return BigReal(a.lo_ * k, a.hi_ * k, a.bits_);
  return BigReal(a.hi_ * k, a.lo_ * k, a.bits_);
}

BigReal sqrt(const BigReal& a) {
  if (sgn(a.hi_) < 0) throw DomainError("BigReal: sqrt of a negative interval");
  const mpz_class lo_arg = sgn(a.lo_) < 0 ? mpz_class(0) : shl(a.lo_, a.bits_);
  const mpz_class hi_arg = shl(a.hi_, a.bits_);
  mpz_class lo, hi;
  mpz_sqrt(lo.get_mpz_t(), lo_arg.get_mpz_t());
  mpz_sqrt(hi.get_mpz_t(), hi_arg.get_mpz_t());
  if (hi * hi != hi_arg) hi += 1;
  return BigReal(lo, hi, a.bits_);
}

BigReal ldexp(const BigReal& a, unsigned k) { return BigReal(shl(a.lo_, k), shl(a.hi_, k), a.bits_); }

std::string BigReal::to_string(int digits) const {
  const mp_bitcnt_t prec = static_cast<mp_bitcnt_t>(digits * 4 + 64);
  mpf_class lo(lower(), prec), hi(upper(), prec);
  std::ostringstream os;
  os.precision(digits);
  os << '[' << lo << ", " << hi << ']';
  return os.str();
}

// ---------------------------------------------------------------------------

BigReal arctan_reciprocal(const mpz_class& k, unsigned bits) {
  if (k < 2) throw DomainError("arctan_reciprocal: k must be at least 2");
  const unsigned g = bits + 16;
  const mpz_class one = pow2(g);
  const mpz_class k2 = k * k;
  mpz_class lo = 0, hi = 0;
  mpz_class power = k;  // k^(2j+1)
  for (unsigned long j = 0;; ++j) {
    const mpz_class denom = power * (2 * j + 1);
    const mpz_class t_floor = floor_div(one, denom);
    const mpz_class t_ceil = ceil_div(one, denom);
    if (j % 2 == 0) {
      lo += t_floor;
      hi += t_ceil;
    } else {
      lo -= t_ceil;
      hi -= t_floor;
    }
    power *= k2;
    // Alternating series with decreasing terms: the tail is bounded by the
    // first omitted term.
    const mpz_class next = ceil_div(one, power * (2 * j + 3));
    if (next <= 1) {
      lo -= next;
      hi += next;
      break;
    }
  }
  return BigReal::from_scaled(lo, hi, g).with_bits(bits);
}

BigReal pi_interval(unsigned bits) {
  const unsigned g = bits + 8;
  const BigReal pi = arctan_reciprocal(5, g) * 16 - arctan_reciprocal(239, g) * 4;
  return pi.with_bits(bits);
}

namespace {

// arctan on an interval inside [0, 1].
BigReal arctan_unit(BigReal x) {
  const unsigned g = x.bits();
  const BigReal one = BigReal::exact(1, g);
  const mpq_class small(1, 8);
  unsigned halvings = 0;
  // arctan(x) = 2 arctan(x / (1 + sqrt(1 + x^2)))
  while (x.upper() > small) {
    x = x / (one + sqrt(one + x * x));
    ++halvings;
  }
  const BigReal x2 = x * x;
  BigReal power = x;
  BigReal sum = x;
  for (long j = 1;; ++j) {
    power = power * x2;
    const BigReal term = power / BigReal::exact(2 * j + 1, g);
    sum = (j % 2 == 1) ? sum - term : sum + term;
    const BigReal next = power * x2 / BigReal::exact(2 * j + 3, g);
    if (next.scaled_upper() <= 1) {
      const mpz_class r = next.scaled_upper();
      sum = sum + BigReal::from_scaled(-r, r, g);
      break;
    }
  }
  return ldexp(sum, halvings);
}

BigReal arctan_point(const mpq_class& q, unsigned bits) {
  const unsigned g = bits + 32;
  if (sgn(q) == 0) return BigReal::exact(0, bits);
  if (sgn(q) < 0) return -arctan_point(-q, bits);
  BigReal r;
  if (q > 1) {
    const BigReal pi = pi_interval(g - 1);
    const BigReal half_pi = BigReal::from_scaled(pi.scaled_lower(), pi.scaled_upper(), g);
    r = half_pi - arctan_unit(BigReal::enclose(1 / q, g));
  } else {
    r = arctan_unit(BigReal::enclose(q, g));
  }
  return r.with_bits(bits);
}

}  // namespace

BigReal arctan(const BigReal& x) {
  const BigReal lo = arctan_point(x.lower(), x.bits());
  const BigReal hi = arctan_point(x.upper(), x.bits());
  return BigReal::from_scaled(lo.scaled_lower(), hi.scaled_upper(), x.bits());
}

BigReal arccot(const BigReal& x) {
  if (!x.positive()) throw DomainError("arccot: interval must be strictly positive");
  return arctan(BigReal::exact(1, x.bits()) / x);
}

}  // namespace galperin
