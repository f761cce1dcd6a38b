#include <doctest.h>

#include <cmath>
#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "galperin/errors.hpp"
#include "galperin/params.hpp"
#include "galperin/quantum.hpp"

using namespace galperin;
using namespace galperin::quantum;

namespace {

struct Reference {
  double nu, x, j, y;
};

const Reference kReference[] = {
#include "oracles/bessel_reference.inc"
};

// J_nu(x) by its power series in 50-digit arithmetic; fine for x <~ 30.
double power_series_j(double nu, double x) {
  using big = boost::multiprecision::cpp_bin_float_50;
  const big half = big(x) / 2;
  const big q = -half * half;
  big term = pow(half, big(nu)) / boost::multiprecision::tgamma(big(nu) + 1);
  big sum = term;
  for (int k = 1; k < 400; ++k) {
    term *= q / (big(k) * (big(nu) + k));
    sum += term;
  }
  return static_cast<double>(sum);
}

}  // namespace

TEST_CASE("cylinder functions against the mpmath table") {
  for (const Reference& r : kReference) {
    const CylinderValue v = cylinder(r.nu, r.x);
    // Relative to the local envelope where J and Y oscillate (zeros make a
    // pointwise relative error meaningless there).
    const double envelope = std::hypot(r.j, r.y);
    const double scale_j = r.x > r.nu ? envelope : std::abs(r.j);
    const double scale_y = r.x > r.nu ? envelope : std::abs(r.y);
    INFO("nu=" << r.nu << " x=" << r.x);
    CHECK(std::abs(v.j - r.j) <= 1e-10 * scale_j);
    CHECK(std::abs(v.y - r.y) <= 1e-10 * scale_y);
    CHECK(v.error_bound < kCylinderTolerance);
  }
}

TEST_CASE("cylinder functions: named examples") {
  CHECK(cyl_j(0.0, 1e-12) == doctest::Approx(1.0).epsilon(1e-15));
  for (double x : {1.0, 2.0, 5.0}) {
    CHECK(cyl_j(0.5, x) == doctest::Approx(std::sqrt(2.0 / (kPi * x)) * std::sin(x)).epsilon(1e-12));
    CHECK(cyl_y(0.5, x) == doctest::Approx(-std::sqrt(2.0 / (kPi * x)) * std::cos(x)).epsilon(1e-12));
  }
  const double series = power_series_j(10.0, 1.0);
  CHECK(cyl_j(10.0, 1.0) == doctest::Approx(series).epsilon(1e-12));
  CHECK(series == doctest::Approx(2.63e-10).epsilon(1e-3));
  for (double nu : {0.0, 2.5, 7.0, 13.3}) {
    for (double x : {0.5, 3.0, 11.0}) CHECK(cyl_j(nu, x) == doctest::Approx(power_series_j(nu, x)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(cyl_j(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(cyl_j(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(cyl_y(1.0, -2.0), DomainError);
  // Y_nu overflows far inside the turning point.
  CHECK_THROWS_AS(cylinder(200.0, 1.0), PrecisionError);
}

TEST_CASE("Wronskian over orders and arguments") {
  for (double nu : {0.5, 3.0, 10.0, 31.4, 100.0, 110.0}) {
    for (int i = 0; i < 50; ++i) {
      const double x = nu / 2 * std::pow(40.0, i / 49.0);
      CHECK(wronskian_residual(cylinder(nu, x), x) < 1e-9);
    }
  }
}

TEST_CASE("Hankel asymptotics") {
  const auto [h1, h2] = hankel_asymptotic(10.0, 1000.0);
  CHECK(std::abs(h1) == doctest::Approx(std::sqrt(2.0 / (kPi * 1000.0))).epsilon(1e-15));
  CHECK(h2 == std::conj(h1));
  auto rel_error = [](double nu, double x) {
    const std::complex<double> exact = hankel1(cylinder(nu, x));
    return std::abs(hankel_asymptotic(nu, x).first - exact) / std::abs(exact);
  };
  // The leading form misses a factor 1 + i(4 nu^2 - 1)/(8x) + ..., so at
  // nu = 10, x = 1000 the error is about 0.0499 (mpmath: 0.0498696), not 1e-3.
  CHECK(rel_error(10.0, 1000.0) == doctest::Approx(0.0498696047186186).epsilon(1e-6));
  CHECK(std::abs(h2 - hankel2(cylinder(10.0, 1000.0))) / std::abs(hankel2(cylinder(10.0, 1000.0))) ==
        doctest::Approx(0.0498696047186186).epsilon(1e-6));
  double prev = 1.0;
  for (double x : {1000.0, 1e4, 1e5, 1e6}) {
    const double err = rel_error(10.0, x);
    CHECK(err < prev);
    CHECK(err == doctest::Approx(399.0 / (8.0 * x)).epsilon(0.01));
    prev = err;
  }
  CHECK(rel_error(10.0, 1e5) < 1e-3);
  for (double nu : {0.0, 3.0, 31.4}) {
    const double x = hankel_asymptotic_threshold(nu);
    CHECK(rel_error(nu, x) == doctest::Approx(std::abs(4 * nu * nu - 1) / (8 * x)).epsilon(0.05));
  }
  // exact for half-integer order 1/2
  CHECK(rel_error(0.5, 10.0) < 1e-14);
  CHECK_THROWS_AS(hankel_asymptotic(10.0, 999.0), ValidityError);
}

TEST_CASE("Hankel modulus decreases and fluxes balance") {
  for (double nu : {0.5, 10.0, 100.0}) {
    double prev = INFINITY;
    const QuantumMode mode{1.0, 1, nu};
    for (int i = 0; i < 200; ++i) {
      const double x = nu / 2 + 0.5 + i * nu / 20;
      const double mod = std::abs(hankel1(cylinder(nu, x)));
      CHECK(mod < prev);
      prev = mod;
      const RadialFlux f = radial_flux(mode, x);
      CHECK(f.incoming > 0.0);
      CHECK(std::abs(f.incoming + f.outgoing) <= 1e-9 * f.incoming);
      CHECK(f.incoming == doctest::Approx(2.0 / (kPi * x)).epsilon(1e-9));
    }
  }
}

TEST_CASE("phase shifts") {
  CHECK(phase_shift(1, kPi / 10) == doctest::Approx(32.98672286269283).epsilon(1e-14));
  for (double beta : {kPi / 10, kPi / 50, std::atan(0.1), 0.7}) {
    for (int n = 1; n < 30; ++n) {
      CHECK(phase_shift(n + 1, beta) - phase_shift(n, beta) ==
            doctest::Approx(kPi * kPi / beta).epsilon(1e-12));
    }
  }
  CHECK(phase_shift_step(kPi / 10) == doctest::Approx(10 * kPi).epsilon(1e-15));
  // heavy big ball: step tends to pi^2 R
  const double r = 1e4;
  CHECK(phase_shift_step(beta_of_ratio(r)) == doctest::Approx(kPi * kPi * r).epsilon(1e-8));
  CHECK_THROWS_AS(phase_shift(0, 0.3), DomainError);
  CHECK_THROWS_AS(phase_shift(1, 0.0), DomainError);
}

TEST_CASE("eta_of") {
  CHECK(eta_of(10.0, 10.0, 1.0) == 0.0);
  CHECK(eta_of(20.0, 10.0, 1.0) == doctest::Approx(kPi / 3));
  CHECK(eta_of(1e300, 10.0, 1.0) == doctest::Approx(kPi / 2));
  CHECK_THROWS_AS(eta_of(5.0, 10.0, 1.0), DomainError);
}

TEST_CASE("theta_mean closed form equals quadrature") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> channel(1, 6);
  std::uniform_real_distribution<double> beta_dist(0.2, 1.4), stretch(0.8, 8.0), k_dist(0.3, 3.0);
  for (int i = 0; i < 60; ++i) {
    const int n = channel(rng);
    const double beta = beta_dist(rng), k = k_dist(rng);
    const double rho = n * kPi / beta / k * stretch(rng);
    const double closed = theta_mean(rho, n, beta, k);
    CHECK(closed == doctest::Approx(theta_mean_quadrature(rho, n, beta, k, Wave::Incident)).epsilon(1e-8));
    CHECK(closed >= 0.0);
    CHECK(closed <= beta);
  }
  // The printed (2n^2+1)^2 variant disagrees with the quadrature.
  const double beta = kPi / 10, rho = 40.0;
  const double closed = theta_mean(rho, 2, beta, 1.0);
  const double misprint = beta / 2 + (closed - beta / 2) * (8.0 * 2 * 3 / 81.0) / theta_mean_coefficient(2);
  CHECK(std::abs(misprint - theta_mean_quadrature(rho, 2, beta, 1.0, Wave::Incident)) > 1e-4);
}

TEST_CASE("theta_mean approaches its far-field limit") {
  const double beta = kPi / 10;
  double sum = 0.0;
  const int samples = 4000;
  for (int i = 0; i < samples; ++i) sum += theta_mean(5000.0 + i * 0.05, 1, beta, 1.0);
  // e^{i c pi} cancels the asymptotic Hankel phase difference, so the cross
  // term tends to the full norm: theta_mean -> beta (1/2 - C/pi^2).
  const double limit = beta * (0.5 - theta_mean_coefficient(1) / (kPi * kPi));
  CHECK(sum / samples == doctest::Approx(limit).epsilon(1e-3));
  CHECK(theta_mean(1e5, 1, beta, 1.0) == doctest::Approx(limit).epsilon(1e-6));
  // the outgoing wave stays inside the wedge as well
  const double out = theta_mean_quadrature(40.0, 1, beta, 1.0, Wave::Outgoing);
  CHECK(out >= 0.0);
  CHECK(out <= beta);
}

TEST_CASE("sample_quantum_curve") {
  const CurveSeries c = sample_quantum_curve(1, kPi / 10, 1.0, 400);
  REQUIRE(c.points.size() == 400);
  CHECK(c.metadata.at("coefficient") == "8n(n+1)/(2n+1)^2");
  for (const CurvePoint& p : c.points) {
    CHECK(p.abscissa > 0.0);
    CHECK(p.abscissa < kPi / 2);
    CHECK(p.ordinate >= 0.0);
    CHECK(p.ordinate <= 1.0);
  }
  // k only rescales rho, so the eta curve is k-invariant
  const CurveSeries scaled = sample_quantum_curve(1, kPi / 10, 3.5, 400);
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    CHECK(scaled.points[i].ordinate == doctest::Approx(c.points[i].ordinate).epsilon(1e-9));
  }
  CHECK_THROWS_AS(sample_quantum_curve(1, kPi / 10, 1.0, 1), DomainError);
}
