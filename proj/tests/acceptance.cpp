// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "galperin/classical.hpp"
#include "galperin/cli.hpp"
#include "galperin/errors.hpp"
#include "galperin/params.hpp"
#include "galperin/quantum.hpp"
#include "galperin/semiclassical.hpp"

using namespace galperin;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

using Criterion = std::function<void(Outcome&)>;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// 1 ---------------------------------------------------------------------------
void digit_extraction(Outcome& o) {
  const char* expected[] = {"3", "31", "314", "3141", "31415", "314159", "3141592", "31415926", "314159265"};
  double slowest = 0.0;
  for (unsigned k = 0; k <= 8; ++k) {
    std::ostringstream out, err;
    const auto t0 = std::chrono::steady_clock::now();
    const int status = cli::run({"digits", "--N", std::to_string(k)}, out, err);
    const double dt = seconds_since(t0);
    slowest = std::max(slowest, dt);
    std::string first;
    std::getline(std::istringstream(out.str()) >> std::ws, first);
    o.require(status == 0 && first == expected[k], "digits --N " + std::to_string(k) + " gave '" + first + "'");
    o.require(dt < 1.0, "digits --N " + std::to_string(k) + " took " + fmt(dt) + " s");
    const classical::PiDigitsCertificate cert = classical::certify_pi_digits(k);
    o.require(cert.agree() && cert.from_collisions.get_str() == expected[k],
              "certificate mismatch at N=" + std::to_string(k));
  }
  if (o.pass) o.detail << "N=0..8 certified; slowest " << fmt(slowest) << " s";
}

// 2 ---------------------------------------------------------------------------
void classical_oracle(Outcome& o) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> log_ratio(0.0, 4.0);
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const double ratio = std::pow(10.0, log_ratio(rng));
    const BilliardParams p = BilliardParams::from_mass_ratio(ratio);
    const auto sim = classical::simulate(p).count;
    const auto closed = classical::count_closed_form(p.beta());
    if (sim != closed) {
      if (mismatches < 3) o.require(false, "ratio " + fmt(ratio) + ": " + std::to_string(sim) + " vs " +
                                               std::to_string(closed));
      ++mismatches;
    }
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  const auto tie_sim = classical::simulate(BilliardParams::from_mass_ratio(3.0)).count;
  const auto tie_closed = classical::count_closed_form(kPi / 6);
  o.require(tie_sim == 5 && tie_closed == 5,
            "pi/6 case: simulate " + std::to_string(tie_sim) + ", closed form " + std::to_string(tie_closed));
  if (o.pass) o.detail << "1000 random ratios in [1, 1e4] and M = 3m agree";
}

// 3 ---------------------------------------------------------------------------
void phase_correspondence(Outcome& o) {
  double worst = 0.0;
  for (double beta : {kPi / 10, kPi / 50, std::atan(0.1), std::atan(0.01)}) {
    const double target = kPi * kPi / beta;
    for (int n = 1; n <= 20; ++n) {
      const double step = quantum::phase_shift(n + 1, beta) - quantum::phase_shift(n, beta);
      worst = std::max(worst, std::abs(step - target) / target);
    }
    worst = std::max(worst, std::abs(quantum::phase_shift_step(beta) - target) / target);
  }
  o.require(worst <= 1e-12, "phase step relative error " + fmt(worst));
  double prev = 0.0;
  bool monotone = true, below = true;
  for (int n = 1; n <= 100; ++n) {
    const double r = semiclassical::total_phase(n, 10.0) / (kPi * kPi * 10.0);
    monotone = monotone && r > prev;
    below = below && r < 1.0;
    prev = r;
  }
  o.require(monotone, "total_phase ratio not strictly increasing");
  o.require(below, "total_phase ratio reached 1");
  o.require(1.0 - prev < 1e-4, "ratio at n=100 is " + fmt(prev));
  if (o.pass) o.detail << "step error " << fmt(worst) << "; ratio at n=100 = 1 - " << fmt(1.0 - prev);
}

// 4 ---------------------------------------------------------------------------
void ode_vs_closed_form(Outcome& o) {
  double worst = 0.0;
  for (int n : {1, 3, 10}) {
    for (double R : {3.08, 10.0, 100.0}) {
      const double closed = semiclassical::total_phase(n, R);
      for (double x_min : {0.5, 1.0, 2.0}) {
        const semiclassical::SemiclassicalConfig cfg(n, BilliardParams::from_mass_ratio(R * R), x_min);
        const double total = semiclassical::integrate_total_phase(cfg).value;
        worst = std::max(worst, std::abs(total - closed) / closed);
        for (double stretch : {1.5, 4.0}) {
          for (auto branch : {semiclassical::Branch::Incoming, semiclassical::Branch::Outgoing}) {
            const double x = stretch * x_min;
            const double a = semiclassical::integrate_phase(x, cfg, branch).value;
            const double b = semiclassical::accumulated_phase(x, cfg, branch);
            worst = std::max(worst, std::abs(a - b) / closed);
          }
        }
      }
    }
  }
  o.require(worst <= 1e-6, "worst relative deviation " + fmt(worst));
  if (o.pass) o.detail << "worst relative deviation " << fmt(worst);
}

// 5 ---------------------------------------------------------------------------
void special_functions(Outcome& o) {
  double worst = 0.0;
  for (double nu : {0.5, 3.0, 10.0, 31.4, 100.0}) {
    for (int i = 0; i < 200; ++i) {
      const double x = nu / 2 * std::pow(40.0, i / 199.0);
      try {
        worst = std::max(worst, quantum::wronskian_residual(quantum::cylinder(nu, x), x));
      } catch (const PrecisionError& e) {
        o.require(false, e.what());
      }
    }
  }
  o.require(worst < 1e-9, "Wronskian residual " + fmt(worst));
  double half = 0.0;
  for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 33.3, 100.0}) {
    const double env = std::sqrt(2.0 / (kPi * x));
    const double s = std::sin(x), c = std::cos(x);
    half = std::max(half, std::abs(quantum::cyl_j(0.5, x) - env * s) / env);
    half = std::max(half, std::abs(quantum::cyl_y(0.5, x) + env * c) / env);
    half = std::max(half, std::abs(quantum::cyl_j(1.5, x) - env * (s / x - c)) / env);
    half = std::max(half, std::abs(quantum::cyl_y(1.5, x) + env * (c / x + s)) / env);
  }
  o.require(half <= 1e-12, "half-integer deviation " + fmt(half));
  if (o.pass) o.detail << "max Wronskian residual " << fmt(worst) << "; half-integer deviation " << fmt(half);
}

bool ordinates_in_unit(const CurveSeries& c) {
  for (const CurvePoint& p : c.points) {
    if (!(p.ordinate >= 0.0 && p.ordinate <= 1.0)) return false;
  }
  return true;
}

// 6 ---------------------------------------------------------------------------
void figure_three(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const double beta = kPi / 10;
  const BilliardParams p = BilliardParams::from_beta(beta);
  const CurveSeries classical = classical::classical_curve(p, {}, 400);
  const std::string collisions = classical.metadata.at("collisions");
  o.require(collisions == "10", "classical curve has " + collisions + " collisions");
  o.require(ordinates_in_unit(classical), "classical ordinate outside [0, 1]");
  std::size_t n10_extrema = 0;
  for (int n : {1, 10}) {
    const semiclassical::SemiclassicalConfig cfg(n, p, 1.0);
    const CurveSeries c = semiclassical::sample_curve(cfg, 400);
    o.require(ordinates_in_unit(c), "n=" + std::to_string(n) + " ordinate outside [0, 1]");
    if (n == 10) n10_extrema = interior_extrema(c).size();
  }
  const long target = static_cast<long>(std::floor(std::sqrt(441.0 / 442.0) * kPi / std::tan(beta)));
  o.require(std::labs(static_cast<long>(n10_extrema) - target) <= 1,
            "n=10 extrema " + std::to_string(n10_extrema) + " vs " + std::to_string(target));
  const double dt = seconds_since(t0);
  o.require(dt < 5.0, "runtime " + fmt(dt) + " s");
  if (o.pass) {
    o.detail << "collisions 10; n=10 extrema " << n10_extrema << " (target " << target << "); " << fmt(dt) << " s";
  }
}

// 7 ---------------------------------------------------------------------------
void figure_five(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const double beta = kPi / 10;
  double first[2] = {0.0, 0.0};
  std::size_t oscillations[2] = {0, 0};
  double worst = 0.0;
  int slot = 0;
  for (int n : {1, 10}) {
    const double l = n * kPi / beta;
    CurveSeries c;
    try {
      c = quantum::sample_quantum_curve(n, beta, 1.0, 400);
    } catch (const PrecisionError& e) {
      o.require(false, e.what());
      return;
    }
    o.require(ordinates_in_unit(c), "l=" + fmt(l) + " ordinate outside [0, 1]");
    const auto ext = interior_extrema(c);
    oscillations[slot] = ext.size();
    first[slot] = ext.empty() ? kPi / 2 : c.points[ext.front()].abscissa;
    for (int i = 1; i <= 50; ++i) {
      const double eta = (kPi / 2) * i / 51.0;
      const double rho = l / std::cos(eta);
      const double closed = quantum::theta_mean(rho, n, beta, 1.0);
      const double quad = quantum::theta_mean_quadrature(rho, n, beta, 1.0, quantum::Wave::Incident);
      worst = std::max(worst, std::abs(closed - quad) / std::abs(quad));
    }
    ++slot;
  }
  o.require(worst <= 1e-8, "closed form vs quadrature " + fmt(worst));
  o.require(first[1] < first[0], "first extremum eta " + fmt(first[0]) + " -> " + fmt(first[1]));
  const long count = static_cast<long>(oscillations[1]);
  const std::size_t classical_count =
      interior_extrema(classical::classical_eta_curve(BilliardParams::from_beta(beta), {}, 400)).size();
  o.require(std::labs(count - 10) <= 1, "l=100 oscillation count " + std::to_string(count) +
                                            ", expected 10 +- 1 (classical curve on the same eta range: " +
                                            std::to_string(classical_count) + ")");
  const double dt = seconds_since(t0);
  o.require(dt < 60.0, "runtime " + fmt(dt) + " s");
  if (o.pass) {
    o.detail << "first extremum " << fmt(first[0]) << " -> " << fmt(first[1]) << "; l=100 count " << count << "; "
             << fmt(dt) << " s";
  }
}

// 8 ---------------------------------------------------------------------------
void berry_phase(Outcome& o) {
  double worst = 0.0;
  for (int n = 1; n <= 10; ++n) {
    for (double x : {0.5, 1.0, 3.7}) worst = std::max(worst, std::abs(semiclassical::berry_connection(n, x)));
  }
  o.require(worst < 1e-10, "Berry connection " + fmt(worst));
  if (o.pass) o.detail << "max |A_n| " << fmt(worst);
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Criterion>> criteria = {
      {"1 digit extraction", digit_extraction},
      {"2 classical oracle equivalence", classical_oracle},
      {"3 phase correspondence", phase_correspondence},
      {"4 ODE vs closed form", ode_vs_closed_form},
      {"5 special functions", special_functions},
      {"6 figure 3 properties", figure_three},
      {"7 figure 5 properties", figure_five},
      {"8 Berry phase", berry_phase},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      check(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double dt = seconds_since(t0);
    std::printf("%s  %-32s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", name, dt, o.detail.str().c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
