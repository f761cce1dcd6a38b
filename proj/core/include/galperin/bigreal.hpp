#pragma once

#include <optional>
#include <string>

#include <gmpxx.h>

namespace galperin {

/// Closed interval [lo, hi] of fixed-point numbers with `bits` fractional
/// bits, stored as scaled integers lo * 2^-bits, hi * 2^-bits.
///
/// Every operation rounds outward, so the true result of the corresponding
/// real operation on any points of the operands stays inside the result.
/// Binary operations work at the larger of the two operand precisions.
class BigReal {
 public:
  BigReal() = default;

  static BigReal exact(const mpz_class& value, unsigned bits);
  static BigReal exact(long value, unsigned bits) { return exact(mpz_class(value), bits); }
  /// Smallest enclosing interval of a rational.
  static BigReal enclose(const mpq_class& value, unsigned bits);
  /// Enclosure of [lo, hi]; throws DomainError if lo > hi.
  static BigReal enclose(const mpq_class& lo, const mpq_class& hi, unsigned bits);
  /// Interval [lo * 2^-bits, hi * 2^-bits] from scaled integers.
  static BigReal from_scaled(mpz_class lo, mpz_class hi, unsigned bits);

  const mpz_class& scaled_lower() const noexcept { return lo_; }
  const mpz_class& scaled_upper() const noexcept { return hi_; }

  unsigned bits() const noexcept { return bits_; }
  mpq_class lower() const;
  mpq_class upper() const;
  mpq_class width() const;
  double lower_double() const;
  double upper_double() const;
  double mid_double() const;

  bool contains(const mpq_class& value) const;
  bool contains(const BigReal& other) const;
  bool overlaps(const BigReal& other) const;
  bool positive() const { return sgn(lo_) > 0; }
  bool negative() const { return sgn(hi_) < 0; }

  /// Same interval rounded outward to `bits` fractional bits (or padded exactly).
  BigReal with_bits(unsigned bits) const;

  /// floor(v) if every point v of the interval shares it.
  std::optional<mpz_class> certain_floor() const;
  /// floor(v) if the interval lies strictly between two consecutive integers,
  /// which also certifies ceil(v) - 1 == floor(v).
  std::optional<mpz_class> floor_if_strictly_inside() const;

  BigReal operator-() const;
  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  /// Exact scaling by an integer.
  friend BigReal operator*(const BigReal& a, long k);
  friend BigReal sqrt(const BigReal& a);
  /// Exact scaling by 2^k.
  friend BigReal ldexp(const BigReal& a, unsigned k);

  std::string to_string(int digits = 20) const;

 private:
  BigReal(mpz_class lo, mpz_class hi, unsigned bits) : lo_(std::move(lo)), hi_(std::move(hi)), bits_(bits) {}

  mpz_class lo_ = 0;
  mpz_class hi_ = 0;
  unsigned bits_ = 64;
};

/// arctan(1/k) for integer k >= 2 by the alternating Taylor series with a
/// rigorous remainder term.
BigReal arctan_reciprocal(const mpz_class& k, unsigned bits);

/// pi from Machin's formula 16 arctan(1/5) - 4 arctan(1/239).
BigReal pi_interval(unsigned bits);

/// arctan over an interval; uses monotonicity at the endpoints.
BigReal arctan(const BigReal& x);

/// arccot(x) = arctan(1/x) for intervals strictly above zero.
BigReal arccot(const BigReal& x);

}  // namespace galperin
