#pragma once

#include <functional>

#include "gsqg/model.hpp"
#include "gsqg/spectral_field.hpp"

namespace gsqg {

/// Largest admissible lambda * |k|^alpha before exp() gets too close to overflow.
inline constexpr double kOverflowExponent = 700.0;

/// Multiplies every coefficient by symbol(|k|).
SpectralField apply_radial(const SpectralField& f, const std::function<double(double)>& symbol);
/// Multiplies every coefficient by symbol(k1, k2) (physical wavevector).
/// The symbol must satisfy symbol(-k) = conj(symbol(k)).
SpectralField apply_symbol(const SpectralField& f,
                           const std::function<Complex(double, double)>& symbol);

/// Lambda^s. Negative s needs a mean-zero field.
SpectralField fractional_laplacian(const SpectralField& f, double s);

/// Throws OverflowGuardError if lambda * k_max^alpha > 700 on this grid.
void check_overflow_guard(const GridSpec& grid, double alpha, double lambda);

/// exp(lambda Lambda^alpha).
SpectralField gevrey_operator(const SpectralField& f, double alpha, double lambda);

/// Average symbol int_0^1 exp(c tau^alpha) d tau for c = lambda |k|^alpha >= 0.
/// Evaluated as the positive series sum_m c^m / (m! (alpha m + 1)).
double gevrey_avg_symbol(double alpha, double c);

/// Multiplier with symbol gevrey_avg_symbol(alpha, lambda |k|^alpha).
SpectralField gevrey_avg_operator(const SpectralField& f, double alpha, double lambda);

/// (ln(1 + |k|^2))^mu.
SpectralField log_multiplier(const SpectralField& f, double mu);

/// d_ell f for ell in {1, 2}.
SpectralField partial(const SpectralField& f, int ell);

/// (-d_2 psi, d_1 psi).
VectorField perp_gradient(const SpectralField& psi);

/// u = -grad^perp M theta with M chosen by the velocity law.
VectorField velocity_from_scalar(const SpectralField& theta, const ModelParams& params);

/// Exact product f g on the field lattice (3/2 zero padding).
SpectralField multiply(const SpectralField& f, const SpectralField& g);

/// u . grad theta with exact products, restricted to the dealiased box.
SpectralField advect(const VectorField& u, const SpectralField& theta);

/// Divergence of the modified flux F_q(theta). One-term branch:
/// (grad^perp M q) . grad theta. Two-term branch adds M((grad^perp theta) . grad q).
SpectralField flux_divergence(const SpectralField& q, const SpectralField& theta,
                              const ModelParams& params);

}  // namespace gsqg
