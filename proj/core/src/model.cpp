#include "gsqg/model.hpp"

#include <cmath>

#include "gsqg/error.hpp"

namespace gsqg {

std::string to_string(VelocityLaw law) { return law == VelocityLaw::log ? "log" : "power"; }

VelocityLaw velocity_law_from_string(const std::string& s) {
  if (s == "power") return VelocityLaw::power;
  if (s == "log") return VelocityLaw::log;
  throw DomainError("unknown velocity law '" + s + "' (expected power or log)");
}

void ModelParams::validate() const {
  if (!(beta > 0.0 && beta <= 2.0)) throw DomainError("beta must lie in (0, 2]");
  if (!(kappa > 0.0 && kappa <= 2.0)) throw DomainError("kappa must lie in (0, 2]");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw DomainError("gamma must be >= 0");
  if (!(eps_visc >= 0.0) || !std::isfinite(eps_visc)) throw DomainError("eps_visc must be >= 0");
  if (velocity_law == VelocityLaw::log) {
    if (beta != 2.0) throw DomainError("log velocity law requires beta = 2");
    if (!(mu > 0.0) || !std::isfinite(mu)) throw DomainError("log velocity law requires mu > 0");
  }
}

double ModelParams::flux_symbol(double k) const noexcept {
  if (k == 0.0) return 0.0;
  if (velocity_law == VelocityLaw::log) return std::pow(std::log1p(k * k), mu);
  return std::pow(k, beta - 2.0);
}

}  // namespace gsqg
