#include "galperin/cylinder.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/bessel_prime.hpp>

#include "galperin/errors.hpp"
#include "galperin/params.hpp"

namespace galperin::quantum {

CylinderValue cylinder(double nu, double x) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("cylinder: order must be a finite nu >= 0");
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("cylinder: argument must be a finite x > 0");
  CylinderValue v;
  try {
    namespace bm = boost::math;
    v.j = bm::cyl_bessel_j(nu, x);
    v.y = bm::cyl_neumann(nu, x);
    v.jp = bm::cyl_bessel_j_prime(nu, x);
    v.yp = bm::cyl_neumann_prime(nu, x);
  } catch (const std::overflow_error& e) {
    throw PrecisionError(std::string("cylinder: overflow at nu=") + std::to_string(nu) + " x=" + std::to_string(x));
  } catch (const boost::math::evaluation_error& e) {
    throw PrecisionError(std::string("cylinder: ") + e.what());
  }
  v.error_bound = wronskian_residual(v, x) + 16 * std::numeric_limits<double>::epsilon();
  if (!(v.error_bound <= kCylinderTolerance)) {
    throw PrecisionError("cylinder: accuracy bound " + std::to_string(v.error_bound) + " at nu=" + std::to_string(nu) +
                         " x=" + std::to_string(x));
  }
  return v;
}

double cyl_j(double nu, double x) { return cylinder(nu, x).j; }
double cyl_y(double nu, double x) { return cylinder(nu, x).y; }

double wronskian_residual(const CylinderValue& v, double x) {
  return std::abs(v.j * v.yp - v.jp * v.y - 2.0 / (kPi * x)) * kPi * x / 2.0;
}

std::complex<double> hankel1(const CylinderValue& v) { return {v.j, v.y}; }
std::complex<double> hankel2(const CylinderValue& v) { return {v.j, -v.y}; }

double hankel_asymptotic_threshold(double nu) { return 10.0 * std::max(1.0, nu * nu); }

std::pair<std::complex<double>, std::complex<double>> hankel_asymptotic(double nu, double x) {
  if (!(nu >= 0.0)) throw DomainError("hankel_asymptotic: order must be >= 0");
  if (!(x >= hankel_asymptotic_threshold(nu))) {
    throw ValidityError("hankel_asymptotic: requires x >= 10 max(1, nu^2)");
  }
  const double modulus = std::sqrt(2.0 / (kPi * x));
  const double phase = x - (nu + 0.5) * kPi / 2;
  const std::complex<double> h1 = std::polar(modulus, phase);
  return {h1, std::conj(h1)};
}

}  // namespace galperin::quantum
