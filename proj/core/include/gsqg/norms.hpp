#pragma once

#include <array>
#include <span>

#include "gsqg/littlewood_paley.hpp"
#include "gsqg/spectral_field.hpp"

namespace gsqg {

/// One time-stamped field of a trajectory.
struct Snapshot {
  double t = 0.0;
  SpectralField field;
};

enum class LambdaSchedule {
  fixed,   // lambda
  power,   // eps_rate * gamma^{alpha/kappa} * t^{alpha/kappa}
  linear,  // eps_rate * t
};

/// Gevrey exponent alpha and the radius lambda, fixed or time dependent.
struct GevreySpec {
  double alpha = 0.4;
  double lambda = 0.0;
  double eps_rate = 0.0;
  LambdaSchedule schedule = LambdaSchedule::fixed;

  double lambda_at(double t, double gamma, double kappa) const;
};

enum class NormKind { sobolev_homogeneous, sobolev_inhomogeneous, besov, gevrey };

struct NormReport {
  NormKind kind = NormKind::sobolev_homogeneous;
  double s = 0.0;
  double alpha = 0.0;
  double lambda = 0.0;
  double value = 0.0;
  GridSpec grid;
};

/// Homogeneous: (L^2 sum |k|^{2s} |f_k|^2)^{1/2}, needs a mean-zero field.
/// Inhomogeneous: weight (1 + |k|^2)^{s/2}.
double sobolev_norm(const SpectralField& f, double s, bool homogeneous = true);
/// (sum_j (2^{js} ||Delta_j f||)^2)^{1/2} over the partition range.
double besov_norm(const SpectralField& f, double s, const Partition& p);
/// ||exp(lambda Lambda^alpha) f||_{H^s dot}.
double gevrey_norm(const SpectralField& f, double alpha, double lambda, double s);

NormReport sobolev_report(const SpectralField& f, double s, bool homogeneous = true);
NormReport besov_report(const SpectralField& f, double s, const Partition& p);
NormReport gevrey_report(const SpectralField& f, double alpha, double lambda, double s);

/// sup over snapshots with t > 0 of (gamma t)^{delta/kappa} ||theta(t)|| in
/// the Gevrey class with radius lambda(t) and exponent sigma_c + delta.
double xt_norm(std::span<const Snapshot> snapshots, const GevreySpec& gevrey, double sigma_c,
               double delta, double gamma, double kappa);

struct InterpolationReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  // lhs / rhs
  bool holds = false;
};

/// ||f||_{s} against ||f||_{s1}^{(s2-s)/(s2-s1)} ||f||_{s2}^{(s-s1)/(s2-s1)};
/// holds when the ratio is <= 1 (up to rounding).
InterpolationReport check_interpolation(const SpectralField& f, double s, double s1, double s2);

/// Lattice L1 norm L^2 sum |k|^s |f_k| against
/// ||f||_{s+s2}^{(s1+1)/(s1+s2)} ||f||_{s-s1}^{(s2-1)/(s1+s2)}; ratio is the
/// realized constant. Needs s1 > -1 > -s2.
InterpolationReport check_l1_interpolation(const SpectralField& f, double s, double s1, double s2);

/// ||G^lambda f||_{s1}^2 <= e ||G^{(1-rho) lambda} f||_{s1}^2
///                         + (2 rho lambda)^{2(s2-s1)/alpha} ||G^lambda f||_{s2}^2.
InterpolationReport check_gevrey_interpolation(const SpectralField& f, double alpha, double lambda,
                                               double rho, double s1, double s2);

/// ||d^b f||_{s} <= (b! / (lambda alpha)^{|b|})^{1/alpha} ||f||_{Gevrey, s}.
InterpolationReport derivative_bound_check(const SpectralField& f, double alpha, double lambda,
                                           std::array<int, 2> b, double s);

}  // namespace gsqg
