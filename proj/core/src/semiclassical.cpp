#include "galperin/semiclassical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>

#include "galperin/errors.hpp"

namespace galperin::semiclassical {
namespace {

void require_level(int n) {
  if (n < 1) throw DomainError("semiclassical: quantum number n must be >= 1");
}

void require_width(double x) {
  if (!(x > 0.0)) throw DomainError("semiclassical: well width must be positive");
}

double bohr_frequency(int n, double x, const BilliardParams& p) {
  return (energy_level(n + 1, x, p) - energy_level(n, x, p)) / p.hbar();
}

inline constexpr double kTurningOffset = 1e-8;
inline constexpr double kOuterRadius = 1e4;  // in units of x_min

// phase gained from x_min to x_min (1 + delta), delta small, per unit c:
// integral of d delta / ((1 + delta) sqrt(2 delta + delta^2)).
double turning_point_expansion(double delta) { return std::sqrt(2.0 * delta) * (1.0 - 5.0 * delta / 12.0); }

// Bohr phase rate per unit length has the form c / (x^2 sqrt(1/x_min^2 - 1/x^2)).
double singular_prefactor(const SemiclassicalConfig& cfg) {
  return bohr_frequency(cfg.n(), cfg.x_min(), cfg.params()) * cfg.x_min() / terminal_speed(cfg);
}

// Integral of the Bohr phase rate from x_min to x.
PhaseIntegral integrate_from_turning_point(double x, const SemiclassicalConfig& cfg) {
  namespace odeint = boost::numeric::odeint;
  const double c = singular_prefactor(cfg);
  const double delta = x / cfg.x_min() - 1.0;
  if (delta <= kTurningOffset) return {c * turning_point_expansion(std::max(delta, 0.0)), 0};

  // Integrate in s = ln x so the 1/x^2 decay does not force tiny steps.
  auto rhs = [&cfg](const double& /*phi*/, double& dphi, double s) {
    const double w = std::exp(s);
    dphi = w * bohr_frequency(cfg.n(), w, cfg.params()) / big_ball_speed(w, cfg);
  };
  double phi = c * turning_point_expansion(kTurningOffset);
  const double s0 = std::log(cfg.x_min()) + std::log1p(kTurningOffset);
  const double s1 = std::log(x);
  auto stepper = odeint::make_controlled(1e-14, 1e-12, odeint::runge_kutta_dopri5<double>());
  const std::size_t steps = odeint::integrate_adaptive(stepper, rhs, phi, s0, s1, 1e-10);
  return {phi, steps};
}

PhaseIntegral half_trip(const SemiclassicalConfig& cfg) {
  const double outer = kOuterRadius * cfg.x_min();
  PhaseIntegral inner = integrate_from_turning_point(outer, cfg);
  // Remaining tail is c arcsin(x_min / outer); series to fifth order.
  const double u = 1.0 / kOuterRadius;
  inner.value += singular_prefactor(cfg) * (u + u * u * u / 6.0 + 3.0 * std::pow(u, 5) / 40.0);
  return inner;
}

}  // namespace

SemiclassicalConfig::SemiclassicalConfig(int n, BilliardParams params, double x_min)
    : n_(n), params_(params), x_min_(x_min) {
  require_level(n);
  if (!(x_min > 0.0) || !std::isfinite(x_min)) throw DomainError("SemiclassicalConfig: x_min must be positive");
}

double energy_level(int n, double x, const BilliardParams& params) {
  require_level(n);
  require_width(x);
  const double h = params.hbar();
  return static_cast<double>(n) * n * kPi * kPi * h * h / (2.0 * params.small_mass() * x * x);
}

double mean_energy(int n, double x, const BilliardParams& params) {
  return 0.5 * (energy_level(n, x, params) + energy_level(n + 1, x, params));
}

double berry_phase(int n) {
  require_level(n);
  return 0.0;
}

double berry_connection(int n, double x) {
  require_level(n);
  require_width(x);
  const double k = n * kPi / x;
  const double norm = std::sqrt(2.0 / x);
  auto integrand = [&](double y) {
    const double psi = norm * std::sin(k * y);
    const double dpsi_dx = -psi / (2.0 * x) - norm * std::cos(k * y) * k * y / x;
    return psi * dpsi_dx;
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, x, 15, 1e-14);
}

double big_ball_speed(double x, const SemiclassicalConfig& cfg) {
  if (!(x >= cfg.x_min())) throw DomainError("big_ball_speed: x must not be below x_min");
  const auto& p = cfg.params();
  const double released = mean_energy(cfg.n(), cfg.x_min(), p) - mean_energy(cfg.n(), x, p);
  return std::sqrt(std::max(0.0, 2.0 * released / p.big_mass()));
}

double terminal_speed(const SemiclassicalConfig& cfg) {
  const auto& p = cfg.params();
  return std::sqrt(2.0 * mean_energy(cfg.n(), cfg.x_min(), p) / p.big_mass());
}

double phase_ratio(int n) {
  require_level(n);
  const double q = 4.0 * n * n + 4.0 * n;
  return std::sqrt((q + 1.0) / (q + 2.0));
}

double total_phase(int n, double ratio_root) { return phase_ratio(n) * kPi * kPi * ratio_root; }

double total_phase(const SemiclassicalConfig& cfg) { return total_phase(cfg.n(), cfg.params().ratio_root()); }

double accumulated_phase(double x, const SemiclassicalConfig& cfg, Branch branch) {
  if (!(x >= cfg.x_min())) throw DomainError("accumulated_phase: x must not be below x_min");
  const double sweep = std::acos(std::min(1.0, cfg.x_min() / x));
  return phase_ratio(cfg.n()) * kPi * cfg.params().ratio_root() *
         (kPi / 2 + static_cast<int>(branch) * sweep);
}

PhaseIntegral integrate_phase(double x, const SemiclassicalConfig& cfg, Branch branch) {
  if (!(x >= cfg.x_min())) throw DomainError("integrate_phase: x must not be below x_min");
  const PhaseIntegral half = half_trip(cfg);
  const PhaseIntegral part = integrate_from_turning_point(x, cfg);
  return {half.value + static_cast<int>(branch) * part.value, half.steps + part.steps};
}

PhaseIntegral integrate_total_phase(const SemiclassicalConfig& cfg) {
  const PhaseIntegral half = half_trip(cfg);
  return {2.0 * half.value, half.steps};
}

double amplitude_coefficient(int n) {
  require_level(n);
  const double odd = 2.0 * n + 1.0;
  return 8.0 * n * (n + 1.0) / (kPi * kPi * odd * odd);
}

double mean_position(const SemiclassicalConfig& cfg, double phase, double x) {
  require_width(x);
  return x / 2 - x * amplitude_coefficient(cfg.n()) * std::cos(phase);
}

std::int64_t extremum_count(const SemiclassicalConfig& cfg) {
  return static_cast<std::int64_t>(std::floor(phase_ratio(cfg.n()) * kPi * cfg.params().ratio_root()));
}

double alpha_of(double rho, double rho_min, int v_sign) {
  if (!(rho_min > 0.0)) throw DomainError("alpha_of: rho_min must be positive");
  if (!(rho >= rho_min)) throw DomainError("alpha_of: rho must not be below rho_min");
  if (v_sign < -1 || v_sign > 1) throw DomainError("alpha_of: v_sign must be -1, 0 or +1");
  return v_sign * std::acos(std::min(1.0, rho_min / rho));
}

CurveSeries sample_curve(const SemiclassicalConfig& cfg, std::size_t grid) {
  if (grid < 2) throw DomainError("sample_curve: grid must be at least 2");
  CurveSeries curve;
  curve.model = "semiclassical";
  curve.abscissa_name = "alpha";
  curve.ordinate_name = "y_over_x";
  curve.metadata["n"] = std::to_string(cfg.n());
  curve.metadata["beta"] = std::to_string(cfg.params().beta());
  curve.metadata["extremum_count"] = std::to_string(extremum_count(cfg));
  curve.points.reserve(grid);
  const double sqrt_big = std::sqrt(cfg.params().big_mass());
  const double rho_min = sqrt_big * cfg.x_min();
  for (std::size_t i = 1; i <= grid; ++i) {
    const double alpha = -kPi / 2 + kPi * static_cast<double>(i) / static_cast<double>(grid + 1);
    const double x = cfg.x_min() / std::cos(alpha);
    const double rho = sqrt_big * x;
    const Branch branch = alpha < 0 ? Branch::Incoming : Branch::Outgoing;
    const double a = alpha_of(rho, rho_min, static_cast<int>(branch));
    const double phase = phase_ratio(cfg.n()) * kPi * cfg.params().ratio_root() * (kPi / 2 + a);
    curve.points.push_back({alpha, mean_position(cfg, phase, x) / x});
  }
  return curve;
}

}  // namespace galperin::semiclassical
