#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsqg/littlewood_paley.hpp"
#include "gsqg/spectral_field.hpp"

namespace gsqg {

/// Largest n accepted by the O(n^4) lattice sums.
inline constexpr int kBruteForceCap = 32;

/// Random fields with |f_k| = |k|^{-decay} * U(1/2, 1) and uniform phases.
struct EnsembleSpec {
  GridSpec grid;
  double decay = 3.0;
  int samples = 10;
  std::uint64_t seed = 1;
  /// Restrict support to the dealiased box.
  bool dealiased = false;

  void validate() const;
};

/// Deterministic in (seed, index). Each coefficient depends only on
/// (seed, index, k), so grids of different n agree on their shared modes.
SpectralField random_test_field(const EnsembleSpec& spec, std::uint64_t index);

/// L^2 sum_xi sum_eta |xi|^sigma f(xi - eta) g(eta) conj(h(xi)) over the lattice.
Complex trilinear_form(const SpectralField& f, const SpectralField& g, const SpectralField& h,
                       double sigma, int cap = kBruteForceCap);
/// Same with the weight |xi - eta|^sigma + |eta|^sigma.
Complex trilinear_form_sym(const SpectralField& f, const SpectralField& g, const SpectralField& h,
                           double sigma, int cap = kBruteForceCap);

struct BonySplit {
  Complex l1;  // low(f) x high(g)
  Complex l2;  // high(f) x low(g)
  Complex l3;  // comparable frequencies
  Complex total() const { return l1 + l2 + l3; }
};

/// Paraproduct split of trilinear_form. Exact when f or g has zero mean.
BonySplit bony_split(const SpectralField& f, const SpectralField& g, const SpectralField& h,
                     double sigma, const Partition& p, int cap = kBruteForceCap);

/// [Delta_j, g] f = Delta_j(g f) - g Delta_j f with exact products.
SpectralField commutator_block(const SpectralField& f, const SpectralField& g, int j,
                               const Partition& p);
/// <[Delta_j, g] f, h> as the lattice sum with symbol phi_j(xi) - phi_j(xi - eta).
Complex commutator_block_direct(const SpectralField& f, const SpectralField& g,
                                const SpectralField& h, int j, int cap = kBruteForceCap);

/// [Lambda^{beta-2} d_ell, g] f with exact products; beta in (1, 2).
SpectralField commutator_singular(const SpectralField& f, const SpectralField& g, int ell,
                                  double beta);

/// One evaluated inequality: the left side, the right-side factors and their
/// combination, and the ratio |value| / bound.
struct TrilinearReport {
  std::string form;
  Complex value;
  std::vector<double> bound_terms;
  double bound = 0.0;
  double ratio = 0.0;
  int j = 0;
  double c_j = 0.0;
  /// Secondary ratio carried by some forms (the log inequality for commutator_log).
  double aux_ratio = 0.0;
  std::uint64_t seed = 0;
  int n = 0;
};

/// <[G Lambda^{sigma+rho} d_ell Delta_j, g] f, h> against the two-term bound.
/// h must be supported in the annulus A_j.
TrilinearReport commutator_gevrey(const SpectralField& f, const SpectralField& g,
                                  const SpectralField& h, double alpha, double lambda, double sigma,
                                  double rho, int j, double nu, double zeta, const Partition& p,
                                  int ell = 1);

/// <[(ln(I - Delta))^mu d_ell, g] f, h> against
/// ||g||_{2-eps+rho}^{1/(1+rho)} ||g||_{1-eps}^{rho/(1+rho)}
///   (||f||_{eps+de} ||h|| + ||f|| ||h||_{eps+de}).
/// aux_ratio is ||(ln(I - Delta))^mu f||_{eps} / ||f||_{eps+de}.
TrilinearReport commutator_log(const SpectralField& f, const SpectralField& g,
                               const SpectralField& h, double mu, double eps, double de, double rho,
                               int ell = 1);

enum class FormId {
  trilinear,            // |L_sigma| vs 2^{eps j} min{...} ||h||
  trilinear_sym,        // same bound for the symmetric weight
  commutator_block,     // |<[Delta_j, g] f, h>| vs 2^{(rho1-rho2-1) j} min{...} ||h||
  commutator_singular,  // ||[Lambda^{beta-2} d_ell, g] f||_{rho2-rho1} vs ||g||_{beta-rho1} ||f||_{rho2}
  commutator_gevrey,
  commutator_log,
  log_inequality,       // ||(ln(I - Delta))^mu f||_{eps} vs ||f||_{eps+de}
};

std::string to_string(FormId id);

/// Parameters consumed by the forms; each form reads only its own subset.
struct FormParams {
  double sigma = 0.3;
  double eps = 0.5;
  double rho1 = 0.25;
  double rho2 = 0.25;
  double beta = 1.5;
  double alpha = 0.4;
  double lambda = 0.05;
  double rho = 0.0;
  double nu = 0.5;
  double zeta = 0.5;
  double mu = 1.0;
  double de = 0.5;
  int ell = 1;
};

/// Evaluates one form on (f, g, h0). Forms that need h supported in A_j use
/// Delta_j h0; the others ignore j.
TrilinearReport evaluate_form(FormId id, const FormParams& params, const SpectralField& f,
                              const SpectralField& g, const SpectralField& h0, int j,
                              const Partition& p);

/// True for forms whose bound is stated per dyadic block.
bool form_is_localized(FormId id);

struct ConstantStatistics {
  FormId form = FormId::trilinear;
  int n = 0;
  std::size_t count = 0;
  double max_ratio = 0.0;
  double median_ratio = 0.0;
  int j_first = 0;
  std::vector<double> c_j;  // per-j maximum ratio
  double c_l2 = 0.0;        // l2 norm of c_j
};

/// Realized constant over the ensemble. Member i uses fields 3i, 3i+1, 3i+2
/// as (f, g, h0); all-zero members are skipped. Throws DomainError if nothing
/// usable remains.
ConstantStatistics estimate_best_constant(FormId id, const FormParams& params,
                                          const EnsembleSpec& ensemble);

struct RefinementReport {
  ConstantStatistics coarse;
  ConstantStatistics fine;
  double growth = 0.0;  // fine.max_ratio / coarse.max_ratio
};

/// Same ensemble seed on n and 2n.
RefinementReport refinement_study(FormId id, const FormParams& params, const EnsembleSpec& coarse);

}  // namespace gsqg
