#include "ijt/penalty.hpp"

#include <cmath>
#include <stdexcept>

namespace ijt {

void validate(const PenaltySpec& p) {
  if (!(p.q > 0.0 && p.q < 1.0))
    throw std::invalid_argument("penalty exponent q must lie in (0,1), got " +
                                std::to_string(p.q));
}

namespace {

void require_positive(double z, const char* who) {
  if (!(z > 0.0) || !std::isfinite(z))
    throw std::domain_error(std::string(who) + ": z must be positive and finite");
}

}  // namespace

double phi_value(const PenaltySpec& p, double z) {
  if (!(z >= 0.0) || !std::isfinite(z))
    throw std::domain_error("phi_value: z must be nonnegative and finite");
  if (z == 0.0) return 0.0;
  const double zq = std::pow(z, p.q);
  return p.family == PenaltyFamily::Power ? zq : std::log1p(zq);
}

double phi_deriv1(const PenaltySpec& p, double z) {
  require_positive(z, "phi_deriv1");
  const double q = p.q;
  const double d = q * std::pow(z, q - 1.0);
  if (p.family == PenaltyFamily::Power) return d;
  return d / (1.0 + std::pow(z, q));
}

double phi_deriv2(const PenaltySpec& p, double z) {
  require_positive(z, "phi_deriv2");
  const double q = p.q;
  if (p.family == PenaltyFamily::Power) return q * (q - 1.0) * std::pow(z, q - 2.0);
  // d/dz [ q z^{q-1} / (1+z^q) ] = q z^{q-2} ((q-1) - z^q) / (1+z^q)^2
  const double zq = std::pow(z, q);
  const double denom = 1.0 + zq;
  return q * std::pow(z, q - 2.0) * ((q - 1.0) - zq) / (denom * denom);
}

double phi_deriv3(const PenaltySpec& p, double z) {
  require_positive(z, "phi_deriv3");
  const double q = p.q;
  if (p.family == PenaltyFamily::Power)
    return q * (q - 1.0) * (q - 2.0) * std::pow(z, q - 3.0);
  // Differentiate phi'' = q z^{q-2} (q-1-z^q) (1+z^q)^{-2} by product rule.
  const double zq = std::pow(z, q);
  const double denom = 1.0 + zq;
  const double u_prime =
      q * std::pow(z, q - 3.0) * ((q - 2.0) * (q - 1.0 - zq) - q * zq);
  const double cross = -2.0 * q * q * std::pow(z, 2.0 * q - 3.0) * (q - 1.0 - zq);
  return u_prime / (denom * denom) + cross / (denom * denom * denom);
}

double phi_sum(const PenaltySpec& p, const Vector& x) {
  double s = 0.0;
  for (int i = 0; i < x.size(); ++i) s += phi_value(p, std::abs(x[i]));
  return s;
}

std::string family_name(PenaltyFamily f) {
  return f == PenaltyFamily::Power ? "power" : "log-power";
}

PenaltyFamily family_from_name(const std::string& name) {
  if (name == "power") return PenaltyFamily::Power;
  if (name == "log-power") return PenaltyFamily::LogPower;
  throw std::invalid_argument("unknown penalty family: " + name);
}

}  // namespace ijt
