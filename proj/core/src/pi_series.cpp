#include "galperin/pi_series.hpp"

namespace galperin {
namespace {

mpz_class floor_div(const mpz_class& n, const mpz_class& d) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}

}  // namespace

// Unbounded spigot over the linear fractional transformations of the
// series pi = sum (k!)^2 2^(k+1) / (2k+1)!.
mpz_class pi_floor_spigot(unsigned n) {
  mpz_class q = 1, r = 0, t = 1, k = 1, digit = 3, l = 3;
  mpz_class result = 0;
  unsigned emitted = 0;
  while (emitted <= n) {
    if (4 * q + r - t < digit * t) {
      result = result * 10 + digit;
      ++emitted;
      const mpz_class next = floor_div(10 * (3 * q + r), t) - 10 * digit;
      r = 10 * (r - digit * t);
      q *= 10;
      digit = next;
    } else {
      const mpz_class next = floor_div(q * (7 * k + 2) + r * l, t * l);
      r = (2 * q + r) * l;
      q *= k;
      t *= l;
      k += 1;
      l += 2;
      digit = next;
    }
  }
  return result;
}

}  // namespace galperin
