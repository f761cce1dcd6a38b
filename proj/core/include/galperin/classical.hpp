#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "galperin/curve.hpp"
#include "galperin/params.hpp"

namespace galperin::classical {

enum class CollisionKind { BallBall, BallWall };

const char* to_string(CollisionKind kind) noexcept;

struct ClassicalState {
  double t = 0.0;
  double x = 0.0;   // big ball
  double y = 0.0;   // small ball, wall at the origin
  double vx = 0.0;
  double vy = 0.0;
};

struct CollisionEvent {
  std::size_t index = 0;  // 1-based
  CollisionKind kind = CollisionKind::BallBall;
  double t = 0.0;
  ClassicalState state_after;
};

/// Standard incidence: big ball at x0 moving toward the wall with speed v0,
/// small ball at rest at y0.
struct InitialCondition {
  double v0 = 1.0;
  double x0 = 10.0;
  double y0 = 1.0;
};

struct CollisionTrace {
  BilliardParams params;
  InitialCondition initial;
  std::vector<CollisionEvent> events;
  std::size_t count = 0;
  /// True when the event sequence was decided in exact integer arithmetic.
  bool exact = false;
  /// Largest relative kinetic-energy deviation seen at any event.
  double max_energy_drift = 0.0;
};

/// Mass ratios up to this bound run with exact velocities.
inline constexpr double kExactRatioLimit = 1e4;

/// Event-driven elastic simulation until no further collision is possible.
///
/// Velocities evolve exactly (integer vectors over a common denominator)
/// when M/m <= kExactRatioLimit, so the collision sequence is bit-exact;
/// larger ratios use doubles under an energy-drift monitor. Event times and
/// positions are always doubles and do not influence the sequence.
CollisionTrace simulate(const BilliardParams& params, const InitialCondition& init = {});

/// ceil(pi / beta) - 1: floor(pi / beta) off the integers, pi/beta - 1 on them.
/// Quotients within 64 ulps of an integer are treated as integer ties.
std::int64_t count_closed_form(double beta);

struct CertifiedCount {
  mpz_class count;
  unsigned bits = 0;          // precision that certified it; 0 for symbolic ties
  bool integer_tie = false;   // pi/beta is an exact integer
};

/// Closed-form count ceil(pi/beta) - 1 for beta = arccot(sqrt(mass_ratio)),
/// evaluated in interval arithmetic with precision doubling from start_bits.
/// The rational ratios 1/3, 1 and 3 are the only ones whose beta divides pi
/// and are answered symbolically. Throws IndeterminateError past max_bits.
CertifiedCount certified_count(const mpq_class& mass_ratio, unsigned start_bits, unsigned max_bits);

struct PiDigitsCertificate {
  unsigned n = 0;
  mpz_class from_collisions;  // certified closed-form count at M/m = 100^n
  mpz_class from_series;      // independent spigot value of floor(pi 10^n)
  unsigned bits = 0;
  bool agree() const { return from_collisions == from_series; }
};

inline constexpr unsigned kMaxDigitsN = 2000;
inline constexpr unsigned kDefaultPrecisionCap = 1u << 20;

/// Precision cap from PI_BILLIARDS_PRECISION_BITS, else kDefaultPrecisionCap.
unsigned precision_cap_from_env();

/// Both routes to floor(pi 10^n). Precision starts at 64 + 10 n bits.
PiDigitsCertificate certify_pi_digits(unsigned n, unsigned max_bits = precision_cap_from_env());

/// floor(pi 10^n) when both routes agree; IndeterminateError otherwise.
mpz_class pi_digits(unsigned n, unsigned max_bits = precision_cap_from_env());

/// Unfolded-trajectory geometry: rho(t)^2 = rho_min^2 + speed^2 (t - t_min)^2.
struct RadialGeometry {
  double rho_min = 0.0;
  double t_min = 0.0;
  double speed = 0.0;
};

RadialGeometry radial_geometry(const BilliardParams& params, const InitialCondition& init);

/// State at time t on the piecewise-linear trajectory of a trace.
ClassicalState state_at(const CollisionTrace& trace, double t);

/// (alpha, y/x) over alpha in (-pi/2, pi/2), `samples` points uniform in alpha.
CurveSeries classical_curve(const BilliardParams& params, const InitialCondition& init, std::size_t samples);

/// (eta, theta/beta) on the incoming half, eta = arccos(rho_min/rho) in (0, pi/2).
CurveSeries classical_eta_curve(const BilliardParams& params, const InitialCondition& init, std::size_t samples);

}  // namespace galperin::classical
