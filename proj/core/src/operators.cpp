#include "gsqg/operators.hpp"

#include <cmath>
#include <vector>

#include "gsqg/error.hpp"
#include "gsqg/fft.hpp"

namespace gsqg {

namespace {

void require_alpha_lambda(double alpha, double lambda) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("Gevrey exponent alpha must lie in (0, 1]");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw DomainError("Gevrey radius lambda must be >= 0");
}

}  // namespace

SpectralField apply_radial(const SpectralField& f, const std::function<double(double)>& symbol) {
  SpectralField out = f;
  auto c = out.coeffs();
  const double k0 = f.grid().k0();
  for_each_mode(f.grid(), [&](std::size_t idx, int m1, int m2) {
    c[idx] *= symbol(k0 * std::hypot(m1, m2));
  });
  return out;
}

SpectralField apply_symbol(const SpectralField& f,
                           const std::function<Complex(double, double)>& symbol) {
  SpectralField out = f;
  auto c = out.coeffs();
  const double k0 = f.grid().k0();
  for_each_mode(f.grid(), [&](std::size_t idx, int m1, int m2) {
    c[idx] *= symbol(k0 * m1, k0 * m2);
  });
  out.enforce_invariants();
  return out;
}

SpectralField fractional_laplacian(const SpectralField& f, double s) {
  if (s < 0.0 && !f.mean_zero()) {
    throw DomainError("Lambda^s with s < 0 needs a mean-zero field");
  }
  if (s == 0.0) return f;
  return apply_radial(f, [s](double k) { return k == 0.0 ? 0.0 : std::pow(k, s); });
}

void check_overflow_guard(const GridSpec& grid, double alpha, double lambda) {
  const double kmax = grid.k_max();
  const double exponent = lambda * std::pow(kmax, alpha);
  if (exponent > kOverflowExponent) throw OverflowGuardError(kmax, exponent);
}

SpectralField gevrey_operator(const SpectralField& f, double alpha, double lambda) {
  require_alpha_lambda(alpha, lambda);
  if (lambda == 0.0) return f;
  check_overflow_guard(f.grid(), alpha, lambda);
  return apply_radial(f, [=](double k) { return std::exp(lambda * std::pow(k, alpha)); });
}

double gevrey_avg_symbol(double alpha, double c) {
  if (c == 0.0) return 1.0;
  if (c < 0.0) throw DomainError("average Gevrey symbol needs c >= 0");
  // Terms are positive; stop once past the peak at m ~ c and negligible.
  double term = 1.0;
  double sum = 1.0;
  for (int m = 1; m < 100000; ++m) {
    term *= c / m;
    const double add = term / (alpha * m + 1.0);
    sum += add;
    if (m > c && add < 1e-18 * sum) break;
  }
  return sum;
}

SpectralField gevrey_avg_operator(const SpectralField& f, double alpha, double lambda) {
  require_alpha_lambda(alpha, lambda);
  if (lambda == 0.0) return f;
  check_overflow_guard(f.grid(), alpha, lambda);
  return apply_radial(f, [=](double k) { return gevrey_avg_symbol(alpha, lambda * std::pow(k, alpha)); });
}

SpectralField log_multiplier(const SpectralField& f, double mu) {
  if (!(mu > 0.0)) throw DomainError("log multiplier needs mu > 0");
  return apply_radial(f, [mu](double k) { return k == 0.0 ? 0.0 : std::pow(std::log1p(k * k), mu); });
}

SpectralField partial(const SpectralField& f, int ell) {
  if (ell != 1 && ell != 2) throw DomainError("derivative direction must be 1 or 2");
  SpectralField out = f;
  auto c = out.coeffs();
  const double k0 = f.grid().k0();
  for_each_mode(f.grid(), [&](std::size_t idx, int m1, int m2) {
    c[idx] *= Complex(0.0, k0 * (ell == 1 ? m1 : m2));
  });
  return out;
}

VectorField perp_gradient(const SpectralField& psi) {
  return VectorField{-partial(psi, 2), partial(psi, 1)};
}

VectorField velocity_from_scalar(const SpectralField& theta, const ModelParams& params) {
  const bool singular = params.velocity_law == VelocityLaw::power && params.beta < 2.0;
  if (singular && !theta.mean_zero()) {
    throw DomainError("power-law velocity with beta < 2 needs a mean-zero scalar");
  }
  const SpectralField m = apply_radial(theta, [&](double k) { return params.flux_symbol(k); });
  return perp_gradient(-m);
}

SpectralField multiply(const SpectralField& f, const SpectralField& g) {
  if (!(f.grid() == g.grid())) throw GridMismatch("product of fields on different grids");
  const int m = fft::product_size(f.grid().n);
  const auto a = fft::synthesize(f, m);
  auto b = fft::synthesize(g, m);
  for (std::size_t i = 0; i < b.size(); ++i) b[i] *= a[i];
  return fft::analyze(b, m, f.grid());
}

SpectralField advect(const VectorField& u, const SpectralField& theta) {
  if (!(u.grid() == theta.grid()) || !(u.c2.grid() == theta.grid())) {
    throw GridMismatch("advect: velocity and scalar live on different grids");
  }
  const int m = fft::product_size(theta.grid().n);
  const auto u1 = fft::synthesize(u.c1, m);
  const auto u2 = fft::synthesize(u.c2, m);
  const auto d1 = fft::synthesize(partial(theta, 1), m);
  const auto d2 = fft::synthesize(partial(theta, 2), m);
  std::vector<double> prod(u1.size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = u1[i] * d1[i] + u2[i] * d2[i];
  return fft::analyze(prod, m, theta.grid()).dealiased();
}

SpectralField flux_divergence(const SpectralField& q, const SpectralField& theta,
                              const ModelParams& params) {
  if (!(q.grid() == theta.grid())) throw GridMismatch("flux: q and theta live on different grids");
  const auto symbol = [&](double k) { return params.flux_symbol(k); };
  SpectralField out = advect(perp_gradient(apply_radial(q, symbol)), theta);
  if (params.two_term()) {
    out += apply_radial(advect(perp_gradient(theta), q), symbol);
  }
  // A divergence: its mean is zero up to roundoff.
  return out.without_mean();
}

}  // namespace gsqg
