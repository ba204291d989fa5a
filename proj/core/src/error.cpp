#include "gsqg/error.hpp"

#include <sstream>

namespace gsqg {

namespace {

std::string overflow_message(double shell, double exponent) {
  std::ostringstream os;
  os.precision(6);
  os << "Gevrey overflow guard: lambda*|k|^alpha = " << exponent << " > 700 on shell |k| = "
     << shell;
  return os.str();
}

std::string cfl_message(double courant, double limit, double t) {
  std::ostringstream os;
  os.precision(6);
  os << "CFL violation at t = " << t << ": Courant number " << courant << " exceeds " << limit;
  return os.str();
}

std::string blowup_message(double t, const LastDiagnostics& last) {
  std::ostringstream os;
  os.precision(6);
  os << "non-finite coefficients at t = " << t << " (last finite state: t = " << last.t
     << ", L2 = " << last.l2 << ", max|u| = " << last.max_u << ")";
  return os.str();
}

std::string join(const std::vector<std::string>& items) {
  std::ostringstream os;
  os << items.size() << " configuration violation(s):";
  for (const auto& s : items) os << "\n  - " << s;
  return os.str();
}

}  // namespace

OverflowGuardError::OverflowGuardError(double shell, double exponent)
    : Error(overflow_message(shell, exponent)), shell_(shell), exponent_(exponent) {}

CflError::CflError(double courant, double limit, double t)
    : Error(cfl_message(courant, limit, t)), courant_(courant), limit_(limit), t_(t) {}

BlowUpError::BlowUpError(double t, LastDiagnostics last)
    : Error(blowup_message(t, last)), t_(t), last_(last) {}

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error(join(violations)), violations_(std::move(violations)) {}

}  // namespace gsqg
