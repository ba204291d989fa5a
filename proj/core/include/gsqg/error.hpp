#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gsqg {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an operation's arguments does not hold.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Two fields (or a field and a config) were built on different grids.
class GridMismatch : public Error {
public:
  using Error::Error;
};

/// lambda * |k|^alpha exceeded the exp() overflow margin on some shell.
class OverflowGuardError : public Error {
public:
  OverflowGuardError(double shell, double exponent);
  double shell() const noexcept { return shell_; }
  double exponent() const noexcept { return exponent_; }

private:
  double shell_;
  double exponent_;
};

/// Requested O(N^4) evaluation on a lattice larger than the configured cap.
class BruteForceCapError : public Error {
public:
  using Error::Error;
};

/// Courant number above the configured limit.
class CflError : public Error {
public:
  CflError(double courant, double limit, double t);
  double courant() const noexcept { return courant_; }
  double limit() const noexcept { return limit_; }
  double time() const noexcept { return t_; }

private:
  double courant_;
  double limit_;
  double t_;
};

/// Diagnostics captured at the last finite state before a blow-up.
struct LastDiagnostics {
  double t = 0.0;
  double l2 = 0.0;
  double max_u = 0.0;
  double courant = 0.0;
};

/// Spectral coefficients lost finiteness during time integration.
class BlowUpError : public Error {
public:
  BlowUpError(double t, LastDiagnostics last);
  double time() const noexcept { return t_; }
  const LastDiagnostics& last() const noexcept { return last_; }

private:
  double t_;
  LastDiagnostics last_;
};

/// Malformed or inconsistent checkpoint / data file.
class FormatError : public Error {
public:
  using Error::Error;
};

/// Filesystem-level failure (open, write, short read of an existing file).
class IoError : public Error {
public:
  using Error::Error;
};

/// Configuration failed validation; carries every violation found.
class ValidationError : public Error {
public:
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
  std::vector<std::string> violations_;
};

}  // namespace gsqg
