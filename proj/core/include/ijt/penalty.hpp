#pragma once

#include <string>

#include "ijt/types.hpp"

namespace ijt {

enum class PenaltyFamily { Power, LogPower };

/// A separable sparsity penalty phi(|z|) applied componentwise.
/// Power:    phi(z) = z^q,          0 < q < 1
/// LogPower: phi(z) = log(1 + z^q), 0 < q < 1
struct PenaltySpec {
  PenaltyFamily family = PenaltyFamily::Power;
  double q = 0.5;
};

// Throws std::invalid_argument unless 0 < q < 1.
void validate(const PenaltySpec& p);

// phi and its first three derivatives. phi_value requires z >= 0; the
// derivatives require z > 0 (phi' blows up at 0, callers must guard).
// All throw std::domain_error outside their domain.
double phi_value(const PenaltySpec& p, double z);
double phi_deriv1(const PenaltySpec& p, double z);
double phi_deriv2(const PenaltySpec& p, double z);
double phi_deriv3(const PenaltySpec& p, double z);

/// Phi(x) = sum_i phi(|x_i|)
double phi_sum(const PenaltySpec& p, const Vector& x);

std::string family_name(PenaltyFamily f);           // "power" / "log-power"
PenaltyFamily family_from_name(const std::string&); // throws on unknown name

}  // namespace ijt
