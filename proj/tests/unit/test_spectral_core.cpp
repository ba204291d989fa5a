#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gsqg/error.hpp"
#include "gsqg/inequality_lab.hpp"
#include "gsqg/model.hpp"
#include "gsqg/operators.hpp"

using namespace gsqg;

namespace {

GridSpec grid(int n = 16) {
  GridSpec g;
  g.n = n;
  return g;
}

// sin(a x1 + b x2) has coefficient -i/2 at (a, b).
SpectralField sine(int a, int b, int n = 16) {
  SpectralField f(grid(n));
  f.set_mode(a, b, Complex(0.0, -0.5));
  return f;
}

SpectralField random_field(int n, std::uint64_t index, double decay = 2.0) {
  EnsembleSpec e;
  e.grid = grid(n);
  e.decay = decay;
  return random_test_field(e, index);
}

double max_diff(const SpectralField& a, const SpectralField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) m = std::max(m, std::abs(a.coeffs()[i] - b.coeffs()[i]));
  return m;
}

}  // namespace

TEST(Grid, ValidatesShape) {
  GridSpec g;
  g.n = 12;
  EXPECT_THROW(g.validate(), DomainError);
  g.n = 8;
  EXPECT_THROW(g.validate(), DomainError);
  g.n = 16;
  g.period = 0.0;
  EXPECT_THROW(g.validate(), DomainError);
  g.period = 1.0;
  g.dealias_fraction = 1.5;
  EXPECT_THROW(g.validate(), DomainError);
  g.dealias_fraction = 2.0 / 3.0;
  EXPECT_NO_THROW(g.validate());
}

TEST(SpectralField, HermitianModeLookup) {
  SpectralField f(grid());
  f.set_mode(-3, 0, Complex(1.0, 2.0));
  EXPECT_EQ(f.mode(3, 0), Complex(1.0, -2.0));
  f.set_mode(2, 5, Complex(0.5, 0.25));
  EXPECT_EQ(f.mode(-2, -5), Complex(0.5, -0.25));
  EXPECT_TRUE(f.satisfies_invariants());
  EXPECT_EQ(f.mode(8, 0), Complex{});
}

TEST(SpectralField, SineSamples) {
  const SpectralField f = sine(1, 0);
  const PhysicalSamples s = to_physical(f);
  const double h = f.grid().spacing();
  double err = 0.0;
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) err = std::max(err, std::abs(s(i, j) - std::sin(i * h)));
  }
  EXPECT_LE(err, 1e-13);
}

TEST(SpectralField, ZeroSamples) {
  const PhysicalSamples s = to_physical(SpectralField(grid()));
  for (double v : s.values) EXPECT_EQ(v, 0.0);
}

TEST(SpectralField, RoundTrip) {
  const SpectralField f = random_field(32, 4);
  const SpectralField g = from_physical(to_physical(f));
  EXPECT_LE(max_diff(f, g), 1e-13);
}

TEST(SpectralField, RejectsNonFiniteSamples) {
  PhysicalSamples s = to_physical(random_field(16, 1));
  s(3, 4) = std::nan("");
  EXPECT_THROW(from_physical(s), DomainError);
}

TEST(SpectralField, ParsevalOnSine) {
  // ||sin x1||^2 on the 2 pi box is 2 pi^2.
  EXPECT_NEAR(l2_norm(sine(1, 0)), std::sqrt(2.0) * std::numbers::pi, 1e-14);
}

TEST(ModelParams, CriticalExponentAndBranch) {
  ModelParams p;
  p.beta = 1.5;
  p.kappa = 0.5;
  EXPECT_DOUBLE_EQ(p.sigma_c(), 2.0);
  EXPECT_TRUE(p.two_term());
  p.beta = 1.2;
  EXPECT_FALSE(p.two_term());
  p.kappa = 0.0;
  EXPECT_THROW(p.validate(), DomainError);
  p.kappa = 0.5;
  p.velocity_law = VelocityLaw::log;
  EXPECT_THROW(p.validate(), DomainError);  // log law needs beta = 2
  p.beta = 2.0;
  p.mu = 0.0;
  EXPECT_THROW(p.validate(), DomainError);
  p.mu = 1.0;
  EXPECT_NO_THROW(p.validate());
}

TEST(FractionalLaplacian, SingleModes) {
  SpectralField f(grid());
  f.set_mode(1, 0, 1.0);
  f.set_mode(3, 4, 1.0);
  const SpectralField a = fractional_laplacian(f, 0.5);
  EXPECT_NEAR(std::abs(a.mode(1, 0)), 1.0, 1e-15);
  const SpectralField b = fractional_laplacian(f, 2.0);
  EXPECT_NEAR(b.mode(3, 4).real(), 25.0, 1e-13);
}

TEST(FractionalLaplacian, InverseOnMeanZero) {
  const SpectralField f = random_field(32, 2);
  EXPECT_LE(max_diff(fractional_laplacian(fractional_laplacian(f, 0.7), -0.7), f), 1e-13);
}

TEST(FractionalLaplacian, NegativeExponentNeedsMeanZero) {
  SpectralField f = random_field(16, 0);
  f.set_mode(0, 0, 1.0);
  EXPECT_THROW(fractional_laplacian(f, -0.5), DomainError);
  EXPECT_EQ(fractional_laplacian(f, 0.5).mode(0, 0), Complex{});
}

TEST(Gevrey, OperatorValues) {
  const SpectralField f = random_field(16, 3);
  EXPECT_EQ(gevrey_operator(f, 0.5, 0.0), f);
  SpectralField m(grid());
  m.set_mode(2, 0, 1.0);
  EXPECT_NEAR(gevrey_operator(m, 1.0, 0.5).mode(2, 0).real(), std::exp(1.0), 1e-14);
  const SpectralField a = gevrey_operator(gevrey_operator(f, 0.6, 0.1), 0.6, 0.2);
  const SpectralField b = gevrey_operator(f, 0.6, 0.3);
  EXPECT_LE(max_diff(a, b), 1e-12 * std::abs(b.mode(7, 7)) + 1e-12);
}

TEST(Gevrey, OverflowGuard) {
  const SpectralField f = random_field(64, 0);
  EXPECT_THROW(gevrey_operator(f, 1.0, 20.0), OverflowGuardError);
}

TEST(Gevrey, AverageSymbol) {
  EXPECT_EQ(gevrey_avg_symbol(0.5, 0.0), 1.0);
  EXPECT_NEAR(gevrey_avg_symbol(1.0, 1.0), std::numbers::e - 1.0, 1e-15);
  // 10^6-panel trapezoid of int_0^1 exp(c s^alpha) ds with c = lambda |k|^alpha.
  const double alpha = 0.5, c = 0.3 * std::pow(4.0, alpha);
  const int panels = 1000000;
  double sum = 0.5 * (1.0 + std::exp(c));
  for (int i = 1; i < panels; ++i) sum += std::exp(c * std::pow(static_cast<double>(i) / panels, alpha));
  const double ref = sum / panels;
  EXPECT_NEAR(gevrey_avg_symbol(alpha, c) / ref, 1.0, 1e-10);
  const SpectralField f = random_field(16, 1);
  EXPECT_EQ(gevrey_avg_operator(f, 0.5, 0.0), f);
}

TEST(LogMultiplier, Values) {
  SpectralField f(grid());
  f.set_mode(0, 0, 1.0);
  f.set_mode(1, 0, 1.0);
  f.set_mode(1, 1, 1.0);
  const SpectralField a = log_multiplier(f, 1.0);
  EXPECT_EQ(a.mode(0, 0), Complex{});
  EXPECT_NEAR(a.mode(1, 0).real(), std::log(2.0), 1e-15);
  SpectralField g(grid());
  g.set_mode(1, 1, 1.0);
  g.set_mode(1, 0, 0.0);
  // |k|^2 = 2 here; |k|^2 = 3 needs a non-lattice period.
  GridSpec odd = grid();
  odd.period = 2.0 * std::numbers::pi / std::sqrt(1.5);
  SpectralField h(odd);
  h.set_mode(1, 1, 1.0);
  EXPECT_NEAR(log_multiplier(h, 2.0).mode(1, 1).real(), std::pow(std::log(4.0), 2), 1e-14);
  EXPECT_NEAR(std::pow(std::log(4.0), 2), 1.921812, 1e-6);
}

TEST(PerpGradient, SineAndDivergence) {
  const VectorField u = perp_gradient(sine(1, 0));
  // cos x1 has coefficient 1/2 at (1, 0).
  EXPECT_NEAR(std::abs(u.c1.mode(1, 0)), 0.0, 1e-16);
  EXPECT_NEAR(u.c2.mode(1, 0).real(), 0.5, 1e-16);
  const SpectralField psi = random_field(32, 5);
  const VectorField v = perp_gradient(psi);
  const SpectralField div = partial(v.c1, 1) + partial(v.c2, 2);
  EXPECT_LE(l2_norm(div), 1e-13 * l2_norm(v.c1));
}

TEST(Velocity, SineForAnyBetaAndLog) {
  for (double beta : {1.2, 1.5, 1.9}) {
    ModelParams p;
    p.beta = beta;
    const VectorField u = velocity_from_scalar(sine(1, 0), p);
    EXPECT_NEAR(u.c2.mode(1, 0).real(), -0.5, 1e-15);
    EXPECT_NEAR(std::abs(u.c1.mode(1, 0)), 0.0, 1e-15);
  }
  ModelParams p;
  p.beta = 2.0;
  p.velocity_law = VelocityLaw::log;
  p.mu = 1.0;
  const VectorField u = velocity_from_scalar(sine(1, 0), p);
  EXPECT_NEAR(u.c2.mode(1, 0).real(), -0.5 * std::log(2.0), 1e-15);
}

TEST(Velocity, CompositionIdentity) {
  ModelParams p;
  p.beta = 1.5;
  const SpectralField th = random_field(32, 6);
  const VectorField a = velocity_from_scalar(th, p);
  const VectorField b = perp_gradient(-fractional_laplacian(th, p.beta - 2.0));
  EXPECT_EQ(max_diff(a.c1, b.c1), 0.0);
  EXPECT_EQ(max_diff(a.c2, b.c2), 0.0);
}

TEST(Advect, ZeroVelocity) {
  const SpectralField th = random_field(16, 0);
  const VectorField u{SpectralField(th.grid()), SpectralField(th.grid())};
  EXPECT_TRUE(advect(u, th).is_zero());
}

TEST(Advect, SkewSymmetry) {
  ModelParams p;
  const SpectralField th = random_field(64, 1).dealiased();
  const VectorField u = velocity_from_scalar(th, p);
  const double scale = std::sqrt(std::pow(l2_norm(u.c1), 2) + std::pow(l2_norm(u.c2), 2)) *
                       l2_norm(fractional_laplacian(th, 1.0)) * l2_norm(th);
  EXPECT_LE(std::abs(inner(advect(u, th), th)), 1e-12 * scale);
}

TEST(Advect, SingleTriad) {
  // u = (cos x2, 0), theta = sin x1: u . grad theta = cos x2 cos x1, which has
  // coefficient 1/4 at (1, 1) and (1, -1).
  SpectralField c1(grid());
  c1.set_mode(0, 1, 0.5);
  const VectorField u{c1, SpectralField(grid())};
  const SpectralField r = advect(u, sine(1, 0));
  EXPECT_NEAR(r.mode(1, 1).real(), 0.25, 1e-15);
  EXPECT_NEAR(r.mode(1, -1).real(), 0.25, 1e-15);
  EXPECT_NEAR(r.mode(1, 1).imag(), 0.0, 1e-15);
  double rest = 0.0;
  for (int a = -7; a <= 7; ++a) {
    for (int b = 0; b <= 7; ++b) {
      if ((a == 1 && b == 1) || (a == -1 && b == 1)) continue;
      rest = std::max(rest, std::abs(r.mode(a, b)));
    }
  }
  EXPECT_LE(rest, 1e-15);
}

TEST(Advect, OutputIsDealiased) {
  ModelParams p;
  const SpectralField th = random_field(32, 8);
  EXPECT_TRUE(advect(velocity_from_scalar(th, p), th).dealias_supported());
}

TEST(FluxDivergence, ZeroCoefficientAndIdentity) {
  const SpectralField th = random_field(32, 2);
  for (double beta : {1.2, 1.8}) {
    ModelParams p;
    p.beta = beta;
    EXPECT_TRUE(flux_divergence(SpectralField(th.grid()), th, p).is_zero());
    const SpectralField a = flux_divergence(-th, th, p);
    const SpectralField b = advect(velocity_from_scalar(th, p), th);
    EXPECT_LE(max_diff(a, b), 1e-12 * l2_norm(b));
  }
}

TEST(FluxDivergence, TwoTermPairingMatchesCommutator) {
  // <div F_q(theta), theta> = -1/2 <[grad Lambda^{beta-2}, grad^perp q] theta, theta>,
  // the right side summed directly over the lattice.
  ModelParams p;
  p.beta = 1.8;
  p.kappa = 0.5;
  ASSERT_TRUE(p.two_term());
  const SpectralField q = random_field(16, 3).dealiased();
  const SpectralField th = random_field(16, 4).dealiased();
  const double lhs = inner(flux_divergence(q, th, p), th);

  // [d_l Lambda^{b-2}, w_l] theta summed over l, where w = grad^perp q, in Fourier:
  // sum_eta i xi_l m(xi) - i (xi-eta)_l m(xi-eta) times w_l(eta) theta(xi - eta).
  const VectorField w = perp_gradient(q);
  const GridSpec& g = th.grid();
  const int K = g.max_index();
  const auto m = [&](int a, int b) {
    const double k = std::hypot(a, b);
    return k == 0.0 ? 0.0 : std::pow(k, p.beta - 2.0);
  };
  double rhs = 0.0;
  for (int x1 = -K; x1 <= K; ++x1) {
    for (int x2 = -K; x2 <= K; ++x2) {
      Complex c{};
      for (int e1 = -K; e1 <= K; ++e1) {
        for (int e2 = -K; e2 <= K; ++e2) {
          const int a1 = x1 - e1, a2 = x2 - e2;
          if (!g.in_lattice(a1, a2)) continue;
          const Complex t = th.mode(a1, a2);
          const Complex s1 = Complex(0.0, x1 * m(x1, x2) - a1 * m(a1, a2));
          const Complex s2 = Complex(0.0, x2 * m(x1, x2) - a2 * m(a1, a2));
          c += (s1 * w.c1.mode(e1, e2) + s2 * w.c2.mode(e1, e2)) * t;
        }
      }
      rhs += (c * std::conj(th.mode(x1, x2))).real();
    }
  }
  rhs *= -0.5 * g.period * g.period;
  EXPECT_NEAR(lhs, rhs, 1e-10 * std::max(std::abs(rhs), 1e-30));
}

TEST(Multiply, MatchesPointwiseProductForBandLimited) {
  const SpectralField f = random_field(32, 1).dealiased();
  const SpectralField g = random_field(32, 2).dealiased();
  const SpectralField fg = multiply(f, g);
  // sin x1 * sin x1 = (1 - cos 2 x1) / 2
  const SpectralField s = multiply(sine(1, 0), sine(1, 0));
  EXPECT_NEAR(s.mode(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(s.mode(2, 0).real(), -0.25, 1e-15);
  EXPECT_TRUE(fg.all_finite());
}
