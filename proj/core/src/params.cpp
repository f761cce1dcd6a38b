#include "galperin/params.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "galperin/errors.hpp"

namespace galperin {

BilliardParams::BilliardParams(double big_mass, double small_mass, double hbar)
    : big_mass_(big_mass), small_mass_(small_mass), hbar_(hbar) {
  if (!(big_mass > 0.0) || !(small_mass > 0.0) || !(hbar > 0.0) || !std::isfinite(big_mass) ||
      !std::isfinite(small_mass) || !std::isfinite(hbar)) {
    throw DomainError("BilliardParams: masses and hbar must be positive and finite");
  }
}

BilliardParams BilliardParams::from_mass_ratio(double mass_ratio, double hbar) {
  return BilliardParams(mass_ratio, 1.0, hbar);
}

BilliardParams BilliardParams::from_beta(double beta, double hbar) {
  if (!(beta > 0.0) || beta >= kPi / 2) {
    throw DomainError("BilliardParams::from_beta: beta must lie in (0, pi/2)");
  }
  const double cot = 1.0 / std::tan(beta);
  return BilliardParams(cot * cot, 1.0, hbar);
}

double BilliardParams::ratio_root() const noexcept { return std::sqrt(big_mass_ / small_mass_); }

double BilliardParams::beta() const noexcept { return beta_of_ratio(ratio_root()); }

double beta_of_ratio(double ratio_root) {
  if (!(ratio_root >= 0.0)) throw DomainError("beta_of_ratio: R must be non-negative");
  if (ratio_root == 0.0) return kPi / 2;
  return std::atan(1.0 / ratio_root);
}

PolarPoint to_polar(double x, double y, const BilliardParams& params) {
  if (!(y >= 0.0) || !(y <= x)) {
    throw DomainError("to_polar: configuration must satisfy 0 <= y <= x");
  }
  const double u = std::sqrt(params.big_mass()) * x;
  const double w = std::sqrt(params.small_mass()) * y;
  if (u == 0.0) return {0.0, 0.0};
  // atan2 can overshoot beta by an ulp on the diagonal y == x.
  const double theta = std::clamp(std::atan2(w, u), 0.0, params.beta());
  return {std::hypot(u, w), theta};
}

std::pair<double, double> from_polar(const PolarPoint& p, const BilliardParams& params) {
  return {p.rho * std::cos(p.theta) / std::sqrt(params.big_mass()),
          p.rho * std::sin(p.theta) / std::sqrt(params.small_mass())};
}

BilliardParams params_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("params: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DomainError("params: expected a JSON object");
  auto number = [&](const char* key) {
    if (!doc.contains(key)) return 1.0;
    if (!doc[key].is_number()) throw DomainError(std::string("params: '") + key + "' must be a number");
    return doc[key].get<double>();
  };
  return BilliardParams(number("M"), number("m"), number("hbar"));
}

}  // namespace galperin
