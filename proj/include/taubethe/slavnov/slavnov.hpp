#ifndef TAUBETHE_SLAVNOV_SLAVNOV_HPP
#define TAUBETHE_SLAVNOV_SLAVNOV_HPP

#include <span>
#include <vector>

#include "taubethe/bethe/solver.hpp"
#include "taubethe/core/matrix.hpp"
#include "taubethe/xxz/chain.hpp"

namespace taubethe::slavnov {

// Exponentiated picture: x = e^{2 lambda}, y = e^{2 mu}, z = e^{2 nu},
// q = e^{gamma}. Everything on this side is polynomial in x, y, z, q, 1/y.
struct ExponentiatedData {
  std::vector<Complex> x, y, z;
  Complex q;

  static ExponentiatedData from_chain(const xxz::ChainSpec& chain,
                                      std::span<const Complex> lams,
                                      std::span<const Complex> mus);

  int n() const { return static_cast<int>(y.size()); }
  int sites() const { return static_cast<int>(z.size()); }
  int width() const { return n() + sites() - 1; }
};

// Coefficient matrix of the Casoratian form: c_ik = kappa_{ki}, N x (N+L-1).
struct CasoratianSpec {
  int n = 0;
  int width = 0;
  DenseMatrix c;
  double smallest_singular_value = 0.0;
  // worst |kappa| / (term mass of its alternating sum); the coefficients have
  // relative error ~ eps over this, which some solutions push far below 1
  double kappa_cancellation = 1.0;
};

// Every bracket quantity depends on rapidity differences only, so shifting
// all rapidities together is an exact symmetry of scalar products. Shifting
// by mean Re(mu) recenters |y| near 1, which keeps the kappa rows (powers of
// 1/y) well-scaled in double precision; fixtures with far-out roots are
// unusable without this.
struct RecenteredFixture {
  xxz::ChainSpec chain;
  std::vector<Complex> mus;
  double delta;  // original rapidity = recentered + delta
};
RecenteredFixture recenter(const xxz::ChainSpec& chain, std::span<const Complex> mus);

// casoratian_spec of the recentered fixture; the coefficients differ from the
// unshifted ones by exact column rescalings of the tau matrix.
CasoratianSpec casoratian_spec_recentered(const xxz::ChainSpec& chain,
                                          std::span<const Complex> mus);

// Full right-hand side of Slavnov's determinant expression, prefactors
// included. The bracket Vandermondes are taken in the standard Slavnov
// orderings prod_{j<k}[lam_k - lam_j][mu_j - mu_k]; with the papers'
// shared-ordering convention that is an extra (-1)^{N(N-1)/2}, fixed here by
// exact agreement with the dense-contraction oracle. Throws
// ResampleNeededError when a lambda sits on a pole of Omega.
Complex slavnov_det(const xxz::ChainSpec& chain, std::span<const Complex> lams,
                    const bethe::BetheSolution& sol, double pole_floor = 1e-6);

// Two-term elementary-symmetric expression rho_{l j}; 1-based l in
// 1..N+L-1, j in 1..N.
Complex rho(const ExponentiatedData& data, int l, int j);

// kappa_{k j} = - sum_{l=1..k} y_j^{l-k-1} rho_{l j}; 1-based.
Complex kappa(const ExponentiatedData& data, int k, int j);
// All of kappa as a (N+L-1) x N matrix.
DenseMatrix kappa_matrix(const ExponentiatedData& data);

CasoratianSpec casoratian_spec(const ExponentiatedData& data);

// det of the rewritten matrix: Omega_ij = sum_k x_i^{k-1} kappa_{kj}.
Complex rewritten_omega_det(const ExponentiatedData& data, std::span<const Complex> xs);

// Cauchy-Binet/Schur side: sum over partitions in the N x (L-1) box of
// det(x_i^{lambda_j + N - j}) det(kappa_{lambda_i + N + 1 - i, j});
// equals rewritten_omega_det.
Complex schur_expansion(const ExponentiatedData& data, std::span<const Complex> xs);

struct RatioConstancy {
  Complex mean_ratio;
  double spread;              // max_r |ratio_r - mean| / |mean|
  double tau_error_estimate;  // worst forward error bound on tau across samples
  bool resolvable;            // the bound supports the requested tolerance
};

// Constancy of oracle / tau over x-samples. The scalar product enters in its
// polynomial normalization oracle(lam(x)) * prod_i e^{(L-1) lam_i} with
// lam(x) = Log(x)/2 (same branch in both factors); without that monomial the
// ratio varies like prod_i x_i^{(1-L)/2} and is not constant — available via
// compensate = false for comparison. Solutions whose kappa matrix is close to
// rank-deficient push the tau evaluation below double precision; such
// fixtures come back with resolvable = false (spread still reported).
RatioConstancy ratio_constancy(const xxz::ChainSpec& chain, const bethe::BetheSolution& sol,
                               const std::vector<std::vector<Complex>>& x_samples,
                               bool compensate = true, double tolerance = 1e-7);

// tau at the multiplicity-1 multiset {xs}: det(omega_ij) with
// omega_ij = sum_k c_ik h_{k-j}{xs}. Equals
// (-1)^{N(N-1)/2} rewritten_omega_det / Vandermonde(xs).
Complex casoratian_det(const CasoratianSpec& spec, std::span<const Complex> xs);

// Same value plus a first-order forward error bound: machine epsilon times
// the cofactor-weighted entry masses (the omega sums may cancel heavily for
// near-degenerate coefficient matrices).
struct CasoratianValue {
  Complex value;
  double error_bound;
};
CasoratianValue casoratian_det_with_error(const CasoratianSpec& spec,
                                          std::span<const Complex> xs);

}  // namespace taubethe::slavnov

#endif
