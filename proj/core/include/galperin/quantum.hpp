#pragma once

#include <cstddef>

#include "galperin/curve.hpp"
#include "galperin/cylinder.hpp"

namespace galperin::quantum {

/// Separable eigenmode of the free particle in the wedge 0 <= theta <= beta:
/// [H_l^(1)(k rho) + H_l^(2)(k rho)] sin(l theta), l = n pi / beta.
struct QuantumMode {
  double k = 1.0;
  int n = 1;
  double l = 0.0;
};

QuantumMode make_mode(int n, double beta, double k = 1.0);

/// delta(n) = (n pi / beta + 1/2) pi, the same for every k.
double phase_shift(int n, double beta);

/// delta(n+1) - delta(n) = pi^2 / beta.
double phase_shift_step(double beta);

/// Coefficient of the cross term in the mean angle: 8 n (n+1) / (2n+1)^2.
/// The quadrature oracle confirms (2n+1)^2, not (2n^2+1)^2, in the denominator.
double theta_mean_coefficient(int n);

/// Relative phase c pi of the (n+1) channel, c = pi / (2 beta).
double relative_phase(double beta);

enum class Wave { Incident, Outgoing };

/// Mean angle of the incident wave H_l^(1) sin(l theta) + e^{i c pi} H_l'^(1) sin(l' theta)
/// at radius rho, closed form in Hankel products.
double theta_mean(double rho, int n, double beta, double k = 1.0);

/// The same expectation (or the outgoing-wave one) by direct Gauss-Kronrod
/// quadrature of |psi|^2 over theta in [0, beta].
double theta_mean_quadrature(double rho, int n, double beta, double k, Wave wave);

/// arccos(l / (k rho)); DomainError inside the turning radius.
double eta_of(double rho, double l, double k);

struct RadialFlux {
  double incoming = 0.0;  // from the H^(1) part
  double outgoing = 0.0;  // from the H^(2) part
};

/// Radial probability current of each Hankel part of the standing mode,
/// per unit |sin(l theta)|^2 and hbar = 1: Im(conj(H) dH/drho).
RadialFlux radial_flux(const QuantumMode& mode, double rho);

/// (eta, theta_mean/beta) uniform in eta over (0, pi/2).
CurveSeries sample_quantum_curve(int n, double beta, double k, std::size_t grid);

}  // namespace galperin::quantum
