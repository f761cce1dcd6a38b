#include "galperin/classical.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <optional>
#include <string>

#include "galperin/bigreal.hpp"
#include "galperin/errors.hpp"
#include "galperin/pi_series.hpp"

namespace galperin::classical {
namespace {

double ratio_to_double(const mpz_class& num, const mpz_class& den) {
  if (sgn(num) == 0) return 0.0;
  long e_num = 0, e_den = 0;
  const double m_num = mpz_get_d_2exp(&e_num, num.get_mpz_t());
  const double m_den = mpz_get_d_2exp(&e_den, den.get_mpz_t());
  return std::ldexp(m_num / m_den, static_cast<int>(e_num - e_den));
}

// Velocities (v0 X / D, v0 Y / D) with masses in the integer ratio a : b.
class ExactVelocities {
 public:
  ExactVelocities(const BilliardParams& params, double v0) : v0_(v0) {
    mpq_class ratio = mpq_class(params.big_mass()) / mpq_class(params.small_mass());
    ratio.canonicalize();
    a_ = ratio.get_num();
    b_ = ratio.get_den();
  }
  bool small_moving_to_wall() const { return sgn(y_) < 0; }
  bool big_not_slower() const { return x_ >= y_; }
  void ball_ball() {
    mpz_class nx = (a_ - b_) * x_ + 2 * b_ * y_;
    mpz_class ny = 2 * a_ * x_ + (b_ - a_) * y_;
    x_ = std::move(nx);
    y_ = std::move(ny);
    d_ *= a_ + b_;
  }
  void wall() { y_ = -y_; }
  double vx() const { return v0_ * ratio_to_double(x_, d_); }
  double vy() const { return v0_ * ratio_to_double(y_, d_); }

 private:
  double v0_;
  mpz_class a_, b_;
  mpz_class x_ = -1, y_ = 0, d_ = 1;
};

class DoubleVelocities {
 public:
  DoubleVelocities(const BilliardParams& params, double v0)
      : big_(params.big_mass()), small_(params.small_mass()), vx_(-v0) {}
  bool small_moving_to_wall() const { return vy_ < 0.0; }
  bool big_not_slower() const { return vx_ >= vy_; }
  void ball_ball() {
    const double total = big_ + small_;
    const double nx = ((big_ - small_) * vx_ + 2.0 * small_ * vy_) / total;
    const double ny = (2.0 * big_ * vx_ + (small_ - big_) * vy_) / total;
    vx_ = nx;
    vy_ = ny;
  }
  void wall() { vy_ = -vy_; }
  double vx() const { return vx_; }
  double vy() const { return vy_; }

 private:
  double big_, small_;
  double vx_, vy_ = 0.0;
};

inline constexpr double kDriftLimit = 1e-6;

template <class Velocities>
CollisionTrace run(const BilliardParams& params, const InitialCondition& init, bool exact) {
  CollisionTrace trace;
  trace.params = params;
  trace.initial = init;
  trace.exact = exact;

  const double q = kPi / params.beta();
  const auto guard = static_cast<std::size_t>(10.0 * std::ceil(q));
  const double energy0 = 0.5 * params.big_mass() * init.v0 * init.v0;

  Velocities vel(params, init.v0);
  ClassicalState s{0.0, init.x0, init.y0, -init.v0, 0.0};
  // The small ball starts at rest, so the big ball reaches it first.
  std::optional<CollisionKind> next = CollisionKind::BallBall;
  while (next) {
    double dt = 0.0;
    if (*next == CollisionKind::BallBall) {
      const double closing = s.vy - s.vx;
      dt = closing > 0.0 ? (s.x - s.y) / closing : 0.0;
    } else {
      dt = s.vy < 0.0 ? s.y / -s.vy : 0.0;
    }
    dt = std::max(dt, 0.0);
    s.t += dt;
    s.x += s.vx * dt;
    s.y += s.vy * dt;
    if (*next == CollisionKind::BallBall) {
      s.y = s.x;
      vel.ball_ball();
    } else {
      s.y = 0.0;
      vel.wall();
    }
    s.vx = vel.vx();
    s.vy = vel.vy();

    ++trace.count;
    if (trace.count > guard) {
      throw ConsistencyError("simulate: collision count exceeded 10 * ceil(pi/beta)");
    }
    trace.events.push_back({trace.count, *next, s.t, s});

    const double energy = 0.5 * (params.big_mass() * s.vx * s.vx + params.small_mass() * s.vy * s.vy);
    trace.max_energy_drift = std::max(trace.max_energy_drift, std::abs(energy / energy0 - 1.0));
    if (trace.max_energy_drift > kDriftLimit) {
      throw ConsistencyError("simulate: kinetic energy drift exceeded " + std::to_string(kDriftLimit));
    }

    // After a ball-ball hit the small ball is always slower than the big one,
    // after a wall hit it always moves away from the wall.
    if (*next == CollisionKind::BallBall) {
      next = vel.small_moving_to_wall() ? std::optional(CollisionKind::BallWall) : std::nullopt;
    } else {
      next = vel.big_not_slower() ? std::nullopt : std::optional(CollisionKind::BallBall);
    }
  }
  return trace;
}

mpz_class pow10(unsigned n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, n);
  return r;
}

bool perfect_square(const mpz_class& v) { return mpz_perfect_square_p(v.get_mpz_t()) != 0; }

mpz_class isqrt(const mpz_class& v) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

}  // namespace

const char* to_string(CollisionKind kind) noexcept {
  return kind == CollisionKind::BallBall ? "ball-ball" : "ball-wall";
}

CollisionTrace simulate(const BilliardParams& params, const InitialCondition& init) {
  if (!(init.v0 > 0.0) || !(init.y0 > 0.0) || !(init.x0 > init.y0) || !std::isfinite(init.v0) ||
      !std::isfinite(init.x0)) {
    throw DomainError("simulate: requires x0 > y0 > 0 and v0 > 0");
  }
  if (params.mass_ratio() <= kExactRatioLimit) return run<ExactVelocities>(params, init, true);
  return run<DoubleVelocities>(params, init, false);
}

std::int64_t count_closed_form(double beta) {
  if (!(beta > 0.0) || beta > kPi / 2) throw DomainError("count_closed_form: beta must lie in (0, pi/2]");
  const double q = kPi / beta;
  const double nearest = std::round(q);
  if (std::abs(q - nearest) <= 64.0 * std::numeric_limits<double>::epsilon() * q) {
    return static_cast<std::int64_t>(nearest) - 1;
  }
  return static_cast<std::int64_t>(std::floor(q));
}

CertifiedCount certified_count(const mpq_class& mass_ratio, unsigned start_bits, unsigned max_bits) {
  mpq_class ratio = mass_ratio;
  ratio.canonicalize();
  if (sgn(ratio) <= 0) throw DomainError("certified_count: mass ratio must be positive");
  // cot(beta)^2 rational with beta a rational multiple of pi forces
  // cos(2 beta) in {0, 1/2, -1/2}.
  if (ratio == 1) return {3, 0, true};
  if (ratio == 3) return {5, 0, true};
  if (ratio == mpq_class(1, 3)) return {2, 0, true};

  const bool square = perfect_square(ratio.get_num()) && perfect_square(ratio.get_den());
  for (unsigned bits = std::max(start_bits, 32u); bits <= max_bits; bits *= 2) {
    BigReal beta;
    if (square && ratio.get_den() == 1 && ratio.get_num() >= 4) {
      beta = arctan_reciprocal(isqrt(ratio.get_num()), bits);
    } else if (square) {
      beta = arccot(BigReal::enclose(mpq_class(isqrt(ratio.get_num()), isqrt(ratio.get_den())), bits));
    } else {
      beta = arccot(sqrt(BigReal::enclose(ratio, bits)));
    }
    if (!beta.positive()) continue;
    const BigReal quotient = pi_interval(bits) / beta;
    if (auto f = quotient.floor_if_strictly_inside()) return {*f, bits, false};
    if (bits > max_bits / 2) break;
  }
  throw IndeterminateError("certified_count: floor of pi/beta not certified within " + std::to_string(max_bits) +
                           " bits");
}

unsigned precision_cap_from_env() {
  const char* raw = std::getenv("PI_BILLIARDS_PRECISION_BITS");
  if (raw == nullptr || *raw == '\0') return kDefaultPrecisionCap;
  unsigned value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value == 0) {
    throw DomainError("PI_BILLIARDS_PRECISION_BITS must be a positive integer");
  }
  return value;
}

PiDigitsCertificate certify_pi_digits(unsigned n, unsigned max_bits) {
  if (n > kMaxDigitsN) throw DomainError("pi_digits: N exceeds " + std::to_string(kMaxDigitsN));
  const mpz_class root = pow10(n);
  const CertifiedCount c = certified_count(mpq_class(root * root), 64 + 10 * n, max_bits);
  return {n, c.count, pi_floor_spigot(n), c.bits};
}

mpz_class pi_digits(unsigned n, unsigned max_bits) {
  const PiDigitsCertificate cert = certify_pi_digits(n, max_bits);
  if (!cert.agree()) {
    throw IndeterminateError("pi_digits: collision count " + cert.from_collisions.get_str() +
                             " disagrees with series value " + cert.from_series.get_str());
  }
  return cert.from_series;
}

RadialGeometry radial_geometry(const BilliardParams& params, const InitialCondition& init) {
  const double sm = std::sqrt(params.big_mass());
  const double ss = std::sqrt(params.small_mass());
  const double px = sm * init.x0, py = ss * init.y0;
  const double vx = -sm * init.v0, vy = 0.0;
  const double speed = std::hypot(vx, vy);
  const double along = (px * vx + py * vy) / speed;
  return {std::abs(px * vy - py * vx) / speed, -along / speed, speed};
}

ClassicalState state_at(const CollisionTrace& trace, double t) {
  auto it = std::upper_bound(trace.events.begin(), trace.events.end(), t,
                             [](double value, const CollisionEvent& e) { return value < e.t; });
  ClassicalState s = it == trace.events.begin()
                         ? ClassicalState{0.0, trace.initial.x0, trace.initial.y0, -trace.initial.v0, 0.0}
                         : std::prev(it)->state_after;
  const double dt = t - s.t;
  s.t = t;
  s.x += s.vx * dt;
  s.y += s.vy * dt;
  return s;
}

CurveSeries classical_curve(const BilliardParams& params, const InitialCondition& init, std::size_t samples) {
  if (samples < 2) throw DomainError("classical_curve: need at least 2 samples");
  const CollisionTrace trace = simulate(params, init);
  const RadialGeometry g = radial_geometry(params, init);

  CurveSeries curve;
  curve.model = "classical";
  curve.abscissa_name = "alpha";
  curve.ordinate_name = "y_over_x";
  curve.metadata["beta"] = std::to_string(params.beta());
  curve.metadata["mass_ratio"] = std::to_string(params.mass_ratio());
  curve.metadata["collisions"] = std::to_string(trace.count);
  curve.points.reserve(samples);
  for (std::size_t i = 1; i <= samples; ++i) {
    const double alpha = -kPi / 2 + kPi * static_cast<double>(i) / static_cast<double>(samples + 1);
    const double t = g.t_min + g.rho_min * std::tan(alpha) / g.speed;
    const ClassicalState s = state_at(trace, t);
    curve.points.push_back({alpha, std::clamp(s.y / s.x, 0.0, 1.0)});
  }
  return curve;
}

CurveSeries classical_eta_curve(const BilliardParams& params, const InitialCondition& init,
                                std::size_t samples) {
  if (samples < 2) throw DomainError("classical_eta_curve: need at least 2 samples");
  const CollisionTrace trace = simulate(params, init);
  const RadialGeometry g = radial_geometry(params, init);
  const double beta = params.beta();

  CurveSeries curve;
  curve.model = "classical";
  curve.abscissa_name = "eta";
  curve.ordinate_name = "theta_over_beta";
  curve.metadata["beta"] = std::to_string(beta);
  curve.metadata["mass_ratio"] = std::to_string(params.mass_ratio());
  curve.points.reserve(samples);
  for (std::size_t i = 1; i <= samples; ++i) {
    const double eta = (kPi / 2) * static_cast<double>(i) / static_cast<double>(samples + 1);
    const double t = g.t_min - g.rho_min * std::tan(eta) / g.speed;
    const ClassicalState s = state_at(trace, t);
    const PolarPoint p = to_polar(s.x, std::clamp(s.y, 0.0, s.x), params);
    curve.points.push_back({eta, p.theta / beta});
  }
  return curve;
}

}  // namespace galperin::classical
