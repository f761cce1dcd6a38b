#pragma once

#include <string>
#include <utility>

namespace galperin {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Masses of the two balls and the action unit. Validated on construction.
///
/// The two-body line problem maps onto a free particle in a planar wedge of
/// opening angle beta = arccot(R), R = sqrt(M/m).
class BilliardParams {
 public:
  BilliardParams() = default;
  BilliardParams(double big_mass, double small_mass, double hbar = 1.0);

  /// Params with m = 1 and M = mass_ratio.
  static BilliardParams from_mass_ratio(double mass_ratio, double hbar = 1.0);
  /// Params with m = 1 and M = cot(beta)^2.
  static BilliardParams from_beta(double beta, double hbar = 1.0);

  double big_mass() const noexcept { return big_mass_; }
  double small_mass() const noexcept { return small_mass_; }
  double hbar() const noexcept { return hbar_; }

  double mass_ratio() const noexcept { return big_mass_ / small_mass_; }
  double ratio_root() const noexcept;  // R
  double beta() const noexcept;

 private:
  double big_mass_ = 1.0;
  double small_mass_ = 1.0;
  double hbar_ = 1.0;
};

struct PolarPoint {
  double rho = 0.0;
  double theta = 0.0;
};

/// arccot(R) for R >= 0; pi/2 at R = 0.
double beta_of_ratio(double ratio_root);

/// Mass-scaled polar coordinates: sqrt(M) x = rho cos(theta), sqrt(m) y = rho sin(theta).
/// Requires 0 <= y <= x. The origin maps to (0, 0).
PolarPoint to_polar(double x, double y, const BilliardParams& params);

/// Inverse of to_polar. Returns (x, y).
std::pair<double, double> from_polar(const PolarPoint& p, const BilliardParams& params);

/// Parses {"M": .., "m": .., "hbar": ..}; missing keys default to 1.
BilliardParams params_from_json(const std::string& text);

}  // namespace galperin
