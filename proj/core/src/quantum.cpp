#include "galperin/quantum.hpp"

#include <cmath>
#include <complex>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "galperin/errors.hpp"
#include "galperin/params.hpp"

namespace galperin::quantum {
namespace {

void require_channel(int n, double beta) {
  if (n < 1) throw DomainError("quantum: channel index n must be >= 1");
  if (!(beta > 0.0) || beta > kPi / 2) throw DomainError("quantum: beta must lie in (0, pi/2]");
}

void require_radius(double rho, double k) {
  if (!(rho > 0.0)) throw DomainError("quantum: rho must be positive");
  if (!(k > 0.0)) throw DomainError("quantum: k must be positive");
}

struct ChannelPair {
  std::complex<double> lower;  // H^(1)_l(k rho)
  std::complex<double> upper;  // H^(1)_l'(k rho)
  double l, lp;
};

ChannelPair hankel_pair(double rho, int n, double beta, double k) {
  const double l = n * kPi / beta;
  const double lp = (n + 1) * kPi / beta;
  return {hankel1(cylinder(l, k * rho)), hankel1(cylinder(lp, k * rho)), l, lp};
}

}  // namespace

QuantumMode make_mode(int n, double beta, double k) {
  require_channel(n, beta);
  if (!(k > 0.0)) throw DomainError("quantum: k must be positive");
  return {k, n, n * kPi / beta};
}

double phase_shift(int n, double beta) {
  require_channel(n, beta);
  return (n * kPi / beta + 0.5) * kPi;
}

double phase_shift_step(double beta) {
  require_channel(1, beta);
  return kPi * kPi / beta;
}

double theta_mean_coefficient(int n) {
  if (n < 1) throw DomainError("quantum: channel index n must be >= 1");
  const double odd = 2.0 * n + 1.0;
  return 8.0 * n * (n + 1.0) / (odd * odd);
}

double relative_phase(double beta) { return kPi * kPi / (2.0 * beta); }

double theta_mean(double rho, int n, double beta, double k) {
  require_channel(n, beta);
  require_radius(rho, k);
  const ChannelPair h = hankel_pair(rho, n, beta, k);
  const std::complex<double> weight = std::polar(1.0, relative_phase(beta));
  // e^{ic pi} H_l^(2) H_l'^(1) + e^{-ic pi} H_l^(1) H_l'^(2)
  const double cross = 2.0 * std::real(weight * std::conj(h.lower) * h.upper);
  const double norm = std::norm(h.lower) + std::norm(h.upper);
  return beta / 2 - beta / (kPi * kPi) * theta_mean_coefficient(n) * cross / norm;
}

double theta_mean_quadrature(double rho, int n, double beta, double k, Wave wave) {
  require_channel(n, beta);
  require_radius(rho, k);
  ChannelPair h = hankel_pair(rho, n, beta, k);
  if (wave == Wave::Outgoing) {
    h.lower = std::conj(h.lower);
    h.upper = std::conj(h.upper);
  }
  const std::complex<double> weight = std::polar(1.0, relative_phase(beta));
  auto density = [&](double theta) {
    return std::norm(h.lower * std::sin(h.l * theta) + weight * h.upper * std::sin(h.lp * theta));
  };
  using quad = boost::math::quadrature::gauss_kronrod<double, 61>;
  const double num = quad::integrate([&](double t) { return t * density(t); }, 0.0, beta, 20, 1e-14);
  const double den = quad::integrate(density, 0.0, beta, 20, 1e-14);
  return num / den;
}

double eta_of(double rho, double l, double k) {
  if (!(l >= 0.0)) throw DomainError("eta_of: l must be non-negative");
  require_radius(rho, k);
  if (k * rho < l) throw DomainError("eta_of: k rho below the turning value l");
  return std::acos(l / (k * rho));
}

RadialFlux radial_flux(const QuantumMode& mode, double rho) {
  require_radius(rho, mode.k);
  const CylinderValue v = cylinder(mode.l, mode.k * rho);
  const std::complex<double> h1(v.j, v.y), h1p(v.jp, v.yp);
  const std::complex<double> h2 = std::conj(h1), h2p = std::conj(h1p);
  return {std::imag(std::conj(h1) * h1p) * mode.k, std::imag(std::conj(h2) * h2p) * mode.k};
}

CurveSeries sample_quantum_curve(int n, double beta, double k, std::size_t grid) {
  require_channel(n, beta);
  if (grid < 2) throw DomainError("sample_quantum_curve: grid must be at least 2");
  const QuantumMode mode = make_mode(n, beta, k);
  CurveSeries curve;
  curve.model = "quantum";
  curve.abscissa_name = "eta";
  curve.ordinate_name = "theta_over_beta";
  curve.metadata["n"] = std::to_string(n);
  curve.metadata["l"] = std::to_string(mode.l);
  curve.metadata["beta"] = std::to_string(beta);
  curve.metadata["k"] = std::to_string(k);
  curve.metadata["coefficient"] = "8n(n+1)/(2n+1)^2";
  curve.points.resize(grid);
  for (std::size_t i = 1; i <= grid; ++i) {
    const double eta = (kPi / 2) * static_cast<double>(i) / static_cast<double>(grid + 1);
    const double rho = mode.l / (k * std::cos(eta));
    curve.points[i - 1] = {eta, theta_mean(rho, n, beta, k) / beta};
  }
  return curve;
}

}  // namespace galperin::quantum
