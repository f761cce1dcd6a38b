#pragma once

#include <complex>
#include <utility>

namespace galperin::quantum {

/// J_nu(x), Y_nu(x) and their x-derivatives at one point.
struct CylinderValue {
  double j = 0.0;
  double y = 0.0;
  double jp = 0.0;
  double yp = 0.0;
  /// A-posteriori relative error bound: normalized Wronskian residual plus
  /// a rounding allowance.
  double error_bound = 0.0;
};

/// Evaluations whose bound exceeds this raise PrecisionError.
inline constexpr double kCylinderTolerance = 1e-9;

/// Real order nu >= 0, argument x > 0.
CylinderValue cylinder(double nu, double x);

double cyl_j(double nu, double x);
double cyl_y(double nu, double x);

/// |J Y' - J' Y - 2/(pi x)| * pi x / 2.
double wronskian_residual(const CylinderValue& v, double x);

std::complex<double> hankel1(const CylinderValue& v);
std::complex<double> hankel2(const CylinderValue& v);

/// Leading large-argument forms sqrt(2/(pi x)) exp(+-i [x - (nu + 1/2) pi/2]).
/// Valid only for x >= 10 max(1, nu^2); ValidityError below.
std::pair<std::complex<double>, std::complex<double>> hankel_asymptotic(double nu, double x);

double hankel_asymptotic_threshold(double nu);

}  // namespace galperin::quantum
