#pragma once

#include <vector>

#include "gsqg/solver.hpp"

namespace gsqg {

/// theta -> lam^{kappa-beta} theta(lam x) as a field on the box of side
/// period / lam. Coefficients keep their lattice index; the critical norm is
/// unchanged. out_n > 0 re-grids onto out_n modes and throws DomainError if
/// the field leaves that grid's dealiased box.
SpectralField rescale_solution(const SpectralField& field, double lam, const ModelParams& params,
                               int out_n = 0);

struct EquivarianceReport {
  double lam = 1.0;
  double gap = 0.0;  // relative L2 gap
  double norm_before = 0.0;
  double norm_after = 0.0;
};

/// Compares rescale(simulate(theta0)(T)) with simulate(rescale(theta0))(T / lam^kappa)
/// using dt / lam^kappa on the rescaled box.
EquivarianceReport scaling_equivariance_check(const SpectralField& theta0, const ModelParams& params,
                                              double lam, double T, double dt,
                                              const SolverOptions& options = {});

/// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct DecaySlope {
  double k = 0.0;
  double slope = 0.0;
  double expected = 0.0;  // -(k + delta) / kappa
  std::size_t points = 0;
};

/// Slope of ||Lambda^k theta(t)||_{H^{sigma+delta}} over t in [t_lo, t_hi];
/// sigma defaults to sigma_c. Throws DomainError with fewer than 10 points.
std::vector<DecaySlope> fit_decay(const Trajectory& traj, const ModelParams& params, double delta,
                                  const std::vector<double>& k_list, double t_lo, double t_hi,
                                  double sigma = std::numeric_limits<double>::quiet_NaN());

/// Runs simulate and fits over the final decade [T/10, T].
std::vector<DecaySlope> decay_study(const SpectralField& theta0, const ModelParams& params,
                                    double delta, const std::vector<double>& k_list, double T,
                                    double dt, const SolverOptions& options = {});

struct GevreySeries {
  std::vector<double> t;
  std::vector<double> value;
  double sup = 0.0;
};

/// (gamma t)^{delta/kappa} ||theta(t)|| in the Gevrey class of radius
/// lambda(t) and exponent sigma + delta, for t > 0. With weighted = false the
/// prefactor and delta are dropped (log endpoint form).
GevreySeries gevrey_tracking(const Trajectory& traj, const ModelParams& params,
                             const GevreySpec& gevrey, double delta,
                             double sigma = std::numeric_limits<double>::quiet_NaN(),
                             bool weighted = true);

}  // namespace gsqg
