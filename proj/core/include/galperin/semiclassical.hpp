#pragma once

#include <cstddef>
#include <cstdint>

#include "galperin/curve.hpp"
#include "galperin/params.hpp"

namespace galperin::semiclassical {

/// Two-level superposition (n, n+1) of a particle in an infinite well whose
/// moving wall is the big ball, retracing at x_min.
class SemiclassicalConfig {
 public:
  SemiclassicalConfig(int n, BilliardParams params, double x_min);

  int n() const noexcept { return n_; }
  const BilliardParams& params() const noexcept { return params_; }
  double x_min() const noexcept { return x_min_; }

 private:
  int n_;
  BilliardParams params_;
  double x_min_;
};

enum class Branch : int { Incoming = -1, Outgoing = 1 };

/// E_n = n^2 pi^2 hbar^2 / (2 m x^2).
double energy_level(int n, double x, const BilliardParams& params);

/// (E_n + E_{n+1}) / 2, the energy of the equal-weight superposition.
double mean_energy(int n, double x, const BilliardParams& params);

/// Berry phase of an instantaneous well eigenstate. Real eigenfunctions make it 0.
double berry_phase(int n);

/// <psi_n | d/dx psi_n> by adaptive Gauss-Kronrod quadrature over [0, x].
double berry_connection(int n, double x);

/// Big-ball speed from energy exchange with the superposition:
/// M v^2 / 2 = E(x_min) - E(x).
double big_ball_speed(double x, const SemiclassicalConfig& cfg);

/// Limit of big_ball_speed as x -> infinity.
double terminal_speed(const SemiclassicalConfig& cfg);

/// sqrt((4n^2+4n+1)/(4n^2+4n+2)); tends to 1 as n grows.
double phase_ratio(int n);

/// Full-trip Bohr phase phase_ratio(n) * pi^2 * R; independent of x_min.
double total_phase(int n, double ratio_root);
double total_phase(const SemiclassicalConfig& cfg);

/// Bohr phase accumulated from t = 0 (x = infinity, incoming) up to width x
/// on the given branch: phase_ratio(n) pi R (pi/2 + sign * arccos(x_min/x)).
double accumulated_phase(double x, const SemiclassicalConfig& cfg, Branch branch);

struct PhaseIntegral {
  double value = 0.0;
  std::size_t steps = 0;
};

/// accumulated_phase by adaptive Dormand-Prince integration of
/// dphi/dx = (E_{n+1} - E_n) / (hbar v(x)), started at x_min (1 + 1e-8) after an
/// analytic expansion across the turning-point singularity.
PhaseIntegral integrate_phase(double x, const SemiclassicalConfig& cfg, Branch branch);

/// integrate_phase out to 1e4 x_min plus the asymptotic tail, both halves.
PhaseIntegral integrate_total_phase(const SemiclassicalConfig& cfg);

/// 8 n (n+1) / (pi^2 (2n+1)^2).
double amplitude_coefficient(int n);

/// <y> = x/2 - x amplitude_coefficient(n) cos(phase).
double mean_position(const SemiclassicalConfig& cfg, double phase, double x);

/// floor(phase_ratio(n) pi R): extrema of cos(phase) over the full trip.
std::int64_t extremum_count(const SemiclassicalConfig& cfg);

/// sign(v) arccos(rho_min / rho).
double alpha_of(double rho, double rho_min, int v_sign);

/// (alpha, <y>/x) uniform in alpha over (-pi/2, pi/2), with rho ~ sqrt(M) x.
CurveSeries sample_curve(const SemiclassicalConfig& cfg, std::size_t grid);

}  // namespace galperin::semiclassical
