#pragma once

#include <string>

namespace gsqg {

enum class VelocityLaw { power, log };

std::string to_string(VelocityLaw law);
/// Parses "power" or "log"; throws DomainError otherwise.
VelocityLaw velocity_law_from_string(const std::string& s);

/// Coefficients of
///   d_t theta + gamma Lambda^kappa theta - eps_visc Delta theta + u . grad theta = 0
/// with u = -grad^perp M theta, where M = Lambda^{beta-2} (power law) or
/// M = (ln(1 + |k|^2))^mu (log law, beta = 2).
struct ModelParams {
  double beta = 1.5;
  double kappa = 0.5;
  double gamma = 1.0;
  double mu = 1.0;
  double eps_visc = 0.0;
  VelocityLaw velocity_law = VelocityLaw::power;

  /// Throws DomainError on the first range violation.
  void validate() const;

  double sigma_c() const noexcept { return 1.0 + beta - kappa; }
  /// Two-term modified flux; the boundary beta = 1 + kappa is included.
  bool two_term() const noexcept { return beta >= 1.0 + kappa; }
  /// Default smoothing exponent delta for the weighted Gevrey norm.
  double default_delta() const noexcept {
    return beta < 1.0 + kappa ? 0.5 * (kappa + 1.0 - beta) : kappa / 3.0;
  }
  /// Symbol of M at |k|.
  double flux_symbol(double k) const noexcept;
};

}  // namespace gsqg
