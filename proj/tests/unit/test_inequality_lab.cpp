#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "gsqg/error.hpp"
#include "gsqg/inequality_lab.hpp"
#include "gsqg/norms.hpp"
#include "gsqg/operators.hpp"

using namespace gsqg;

namespace {

GridSpec grid(int n) {
  GridSpec g;
  g.n = n;
  return g;
}

EnsembleSpec ensemble(int n, double decay = 2.0) {
  EnsembleSpec e;
  e.grid = grid(n);
  e.decay = decay;
  return e;
}

SpectralField random_field(int n, std::uint64_t index, double decay = 2.0) {
  return random_test_field(ensemble(n, decay), index);
}

using Symbol = std::function<Complex(double, double, double, double)>;  // (xi, eta)

// L^2 sum_xi sum_eta m(xi, eta) f(xi - eta) g(eta) conj(h(xi)), xi and eta on
// the lattice. Straight loops, no shared code with the library sums.
Complex direct_sum(const SpectralField& f, const SpectralField& g, const SpectralField& h,
                   const Symbol& m) {
  const GridSpec& gr = f.grid();
  const int K = gr.max_index();
  const double k0 = gr.k0();
  Complex total{};
  for (int x1 = -K; x1 <= K; ++x1) {
    for (int x2 = -K; x2 <= K; ++x2) {
      const Complex hx = std::conj(h.mode(x1, x2));
      if (hx == Complex{}) continue;
      for (int e1 = -K; e1 <= K; ++e1) {
        for (int e2 = -K; e2 <= K; ++e2) {
          if (!gr.in_lattice(x1 - e1, x2 - e2)) continue;
          total += m(k0 * x1, k0 * x2, k0 * e1, k0 * e2) * f.mode(x1 - e1, x2 - e2) * g.mode(e1, e2) * hx;
        }
      }
    }
  }
  return gr.period * gr.period * total;
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST(RandomField, DeterministicAndAdmissible) {
  const SpectralField a = random_field(32, 7);
  const SpectralField b = random_field(32, 7);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.satisfies_invariants());
  EXPECT_TRUE(a.mean_zero());
  // Shared modes agree across resolutions.
  const SpectralField c = random_field(64, 7);
  EXPECT_EQ(a.mode(3, -5), c.mode(3, -5));
  EXPECT_EQ(a.mode(15, 15), c.mode(15, 15));
}

TEST(RandomField, TailGrowth) {
  // decay 3 in 2D: H^1 converges, H^{2.6} diverges with n.
  const double h1_32 = sobolev_norm(random_field(32, 0, 3.0), 1.0);
  const double h1_128 = sobolev_norm(random_field(128, 0, 3.0), 1.0);
  EXPECT_LT(h1_128 / h1_32, 1.5);
  const double hs_32 = sobolev_norm(random_field(32, 0, 3.0), 2.6);
  const double hs_128 = sobolev_norm(random_field(128, 0, 3.0), 2.6);
  EXPECT_GT(hs_128 / hs_32, 2.0);
}

TEST(Trilinear, TriadMismatchIsZero) {
  SpectralField f(grid(16)), g(grid(16)), h(grid(16));
  f.set_mode(1, 2, 1.0);
  g.set_mode(2, 1, 1.0);
  h.set_mode(4, 4, 1.0);
  EXPECT_EQ(trilinear_form(f, g, h, 0.3), Complex{});
}

TEST(Trilinear, PlancherelAtSigmaZero) {
  const SpectralField f = random_field(16, 0), g = random_field(16, 1), h = random_field(16, 2);
  const Complex l = trilinear_form(f, g, h, 0.0);
  EXPECT_LE(std::abs(l.imag()), 1e-12 * std::abs(l));
  EXPECT_NEAR(l.real(), inner(multiply(f, g), h), 1e-12 * std::abs(l));
}

TEST(Trilinear, MatchesDirectSum) {
  const SpectralField f = random_field(16, 3), g = random_field(16, 4), h = random_field(16, 5);
  const Complex ref = direct_sum(f, g, h, [](double a, double b, double, double) {
    return Complex(std::pow(std::hypot(a, b), 0.7));
  });
  EXPECT_LE(rel(trilinear_form(f, g, h, 0.7), ref), 1e-12);
}

TEST(TrilinearSym, Properties) {
  const SpectralField f = random_field(16, 3), g = random_field(16, 4), h = random_field(16, 5);
  EXPECT_LE(rel(trilinear_form_sym(f, g, h, 0.0), 2.0 * trilinear_form(f, g, h, 0.0)), 1e-14);
  EXPECT_LE(rel(trilinear_form_sym(f, g, h, 0.6), trilinear_form_sym(g, f, h, 0.6)), 1e-12);
  // One triad: (|k_f|^s + |k_g|^s) L^2 f g conj(h), counted once per sign.
  SpectralField a(grid(16)), b(grid(16)), c(grid(16));
  a.set_mode(3, 0, 1.0);
  b.set_mode(0, 4, 1.0);
  c.set_mode(3, 4, 1.0);
  const double L2 = 4.0 * std::numbers::pi * std::numbers::pi;
  const double expect = 2.0 * (std::pow(3.0, 0.6) + std::pow(4.0, 0.6)) * L2;
  EXPECT_NEAR(trilinear_form_sym(a, b, c, 0.6).real(), expect, 1e-12 * expect);
}

TEST(Trilinear, BruteForceCap) {
  const SpectralField f = random_field(64, 0);
  EXPECT_THROW(trilinear_form(f, f, f, 0.0), BruteForceCapError);
}

TEST(Bony, ZeroAndIdentity) {
  const Partition p = build_partition(grid(16));
  const SpectralField f = random_field(16, 0), g = random_field(16, 1), h = random_field(16, 2);
  const BonySplit z = bony_split(SpectralField(p.grid), g, h, 0.3, p);
  EXPECT_EQ(z.l1, Complex{});
  EXPECT_EQ(z.l2, Complex{});
  EXPECT_EQ(z.l3, Complex{});
  for (double s : {-0.5, 0.0, 0.3, 0.9}) {
    EXPECT_LE(rel(bony_split(f, g, h, s, p).total(), trilinear_form(f, g, h, s)), 1e-12);
  }
}

TEST(Bony, LowHighCarriesEverything) {
  // |k_f| = 1 against |k_g| = 15 sqrt 2: the blocks of g all sit above j + 3.
  const Partition p = build_partition(grid(32));
  SpectralField f(p.grid), g(p.grid);
  f.set_mode(1, 0, Complex(0.3, 0.1));
  g.set_mode(15, 15, Complex(0.2, -0.4));
  const SpectralField h = random_field(32, 9);
  const BonySplit b = bony_split(f, g, h, 0.3, p);
  EXPECT_EQ(b.l2, Complex{});
  EXPECT_EQ(b.l3, Complex{});
  EXPECT_LE(rel(b.l1, trilinear_form(f, g, h, 0.3)), 1e-13);
  EXPECT_NE(b.l1, Complex{});
}

TEST(CommutatorBlock, ConstantAndDirect) {
  const Partition p = build_partition(grid(16));
  const SpectralField f = random_field(16, 0);
  SpectralField c(p.grid);
  c.set_mode(0, 0, 2.5);
  for (int j = p.j_min; j <= p.j_max; ++j) EXPECT_LE(l2_norm(commutator_block(f, c, j, p)), 1e-14 * l2_norm(f));
  const SpectralField g = random_field(16, 1), h0 = random_field(16, 2);
  for (int j = p.j_min; j <= p.j_max; ++j) {
    const SpectralField h = dyadic_block(h0, j, p);
    if (h.is_zero()) continue;
    const double a = inner(commutator_block(f, g, j, p), h);
    const Complex b = commutator_block_direct(f, g, h, j);
    const Complex c2 = direct_sum(f, g, h, [j](double x1, double x2, double e1, double e2) {
      return Complex(Partition::phi(j, std::hypot(x1, x2)) - Partition::phi(j, std::hypot(x1 - e1, x2 - e2)));
    });
    EXPECT_NEAR(a, b.real(), 1e-11 * std::abs(b) + 1e-13);
    EXPECT_LE(rel(b, c2), 1e-11);
  }
}

TEST(CommutatorBlock, SingleModes) {
  const Partition p = build_partition(grid(16));
  SpectralField f(p.grid), g(p.grid);
  f.set_mode(3, 0, 1.0);
  g.set_mode(0, 2, 1.0);
  const int j = 2;
  const SpectralField c = commutator_block(f, g, j, p);
  // f g has the mode (3, 2) with coefficient 1.
  EXPECT_NEAR(c.mode(3, 2).real(), Partition::phi(j, std::hypot(3, 2)) - Partition::phi(j, 3.0), 1e-15);
}

TEST(CommutatorSingular, ConstantAndSymbol) {
  SpectralField c(grid(16));
  const SpectralField f = random_field(16, 0);
  EXPECT_TRUE(commutator_singular(f, c, 1, 1.5).is_zero());
  SpectralField a(grid(16)), b(grid(16));
  a.set_mode(3, 1, 1.0);  // f
  b.set_mode(1, 2, 1.0);  // g
  const double beta = 1.7;
  const SpectralField out = commutator_singular(a, b, 1, beta);
  const auto m = [&](double x1, double x2) { return std::pow(std::hypot(x1, x2), beta - 2.0) * x1; };
  EXPECT_NEAR(out.mode(4, 3).imag(), m(4, 3) - m(3, 1), 1e-14);
  EXPECT_THROW(commutator_singular(a, b, 1, 2.0), DomainError);
}

TEST(CommutatorSingular, PairingMatchesDirectSum) {
  const SpectralField f = random_field(16, 0), g = random_field(16, 1), h = random_field(16, 2);
  const double beta = 1.4;
  const Complex ref = direct_sum(f, g, h, [beta](double x1, double x2, double e1, double e2) {
    const auto m = [beta](double a, double b) {
      const double k = std::hypot(a, b);
      return k == 0.0 ? 0.0 : std::pow(k, beta - 2.0) * b;
    };
    return Complex(0.0, m(x1, x2) - m(x1 - e1, x2 - e2));
  });
  EXPECT_NEAR(inner(commutator_singular(f, g, 2, beta), h), ref.real(), 1e-12 * std::abs(ref));
}

TEST(CommutatorGevrey, Degenerations) {
  const Partition p = build_partition(grid(16));
  const SpectralField f = random_field(16, 0), g = random_field(16, 1);
  const SpectralField h = dyadic_block(random_field(16, 2), 2, p);
  const TrilinearReport r0 = commutator_gevrey(f, g, h, 0.4, 0.0, 0.3, 0.0, 2, 0.5, 0.5, p);
  EXPECT_EQ(r0.bound_terms[1], 0.0);
  SpectralField c(p.grid);
  c.set_mode(0, 0, 1.0);
  const TrilinearReport rc = commutator_gevrey(f, c, h, 0.4, 0.05, 0.3, 0.0, 2, 0.5, 0.5, p);
  EXPECT_LE(std::abs(rc.value), 1e-13 * l2_norm(f) * l2_norm(h) * 1e3);
  EXPECT_THROW(commutator_gevrey(f, g, random_field(16, 2), 0.4, 0.05, 0.3, 0.0, 2, 0.5, 0.5, p), DomainError);
}

TEST(CommutatorGevrey, MatchesDirectSum) {
  const Partition p = build_partition(grid(16));
  const SpectralField f = random_field(16, 0), g = random_field(16, 1);
  const int j = 2;
  const SpectralField h = dyadic_block(random_field(16, 2), j, p);
  const double alpha = 0.4, lambda = 0.05, sigma = 0.3, rho = 0.2;
  const TrilinearReport r = commutator_gevrey(f, g, h, alpha, lambda, sigma, rho, j, 0.5, 0.5, p);
  const auto m = [&](double a, double b) {
    const double k = std::hypot(a, b);
    if (k == 0.0) return 0.0;
    return std::exp(lambda * std::pow(k, alpha)) * std::pow(k, sigma + rho) * Partition::phi(j, k) * a;
  };
  const Complex ref = direct_sum(f, g, h, [&](double x1, double x2, double e1, double e2) {
    return Complex(0.0, m(x1, x2) - m(x1 - e1, x2 - e2));
  });
  EXPECT_NEAR(r.value.real(), ref.real(), 1e-11 * std::abs(ref));
  EXPECT_TRUE(std::isfinite(r.ratio));
}

TEST(CommutatorLog, ConstantAndSymbol) {
  const SpectralField f = random_field(16, 0), h = random_field(16, 2);
  SpectralField c(grid(16));
  c.set_mode(0, 0, 1.0);
  EXPECT_LE(std::abs(commutator_log(f, c, h, 1.0, 0.3, 0.5, 1.0).value), 1e-10);
  const SpectralField g = random_field(16, 1);
  const Complex ref = direct_sum(f, g, h, [](double x1, double x2, double e1, double e2) {
    const auto m = [](double a, double b) { return std::log1p(a * a + b * b) * a; };
    return Complex(0.0, m(x1, x2) - m(x1 - e1, x2 - e2));
  });
  const TrilinearReport r = commutator_log(f, g, h, 1.0, 0.3, 0.5, 1.0);
  EXPECT_NEAR(r.value.real(), ref.real(), 1e-12 * std::abs(ref));
  EXPECT_GT(r.aux_ratio, 0.0);
  EXPECT_THROW(commutator_log(f, g, h, 1.0, 0.3, 2.5, 1.0), DomainError);
}

TEST(BestConstant, SingleMemberAndStats) {
  EnsembleSpec e = ensemble(16);
  e.samples = 1;
  const ConstantStatistics s = estimate_best_constant(FormId::log_inequality, FormParams{}, e);
  EXPECT_EQ(s.count, 1u);
  EXPECT_EQ(s.max_ratio, s.median_ratio);
  e.samples = 5;
  const ConstantStatistics t = estimate_best_constant(FormId::trilinear, FormParams{}, e);
  EXPECT_GT(t.count, 0u);
  EXPECT_FALSE(t.c_j.empty());
  EXPECT_GE(t.max_ratio, t.median_ratio);
}

TEST(BestConstant, TrilinearRefinement) {
  EnsembleSpec e = ensemble(16, 3.0);
  e.samples = 10;
  FormParams q;
  q.sigma = 0.3;
  q.eps = 0.5;
  const RefinementReport r = refinement_study(FormId::trilinear, q, e);
  EXPECT_EQ(r.fine.n, 32);
  EXPECT_LE(r.growth, 2.0);
}
