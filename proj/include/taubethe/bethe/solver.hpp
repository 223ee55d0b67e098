#ifndef TAUBETHE_BETHE_SOLVER_HPP
#define TAUBETHE_BETHE_SOLVER_HPP

#include <span>
#include <vector>

#include "taubethe/core/sampling.hpp"
#include "taubethe/xxz/chain.hpp"

namespace taubethe::bethe {

struct BetheSolution {
  std::vector<Complex> mus;  // canonical order: lexicographic by (Re, Im)
  double residual;           // max_i |G_i| / term mass
  double eigen_residual;     // from the dense transfer-matrix check
};

// Polynomial-form defect, poles multiplied out:
//   G_i = prod_l [mu_i - nu_l + g] prod_{j != i} [mu_i - mu_j - g]
//       - prod_l [mu_i - nu_l]     prod_{j != i} [mu_i - mu_j + g]
// All zeros iff the Bethe equations hold. Throws DegenerateInputError on
// coincident mus.
std::vector<Complex> bethe_defect(const xxz::ChainSpec& chain,
                                  std::span<const Complex> mus);

// max_i |G_i| normalized by the per-equation term mass.
double bethe_defect_norm(const xxz::ChainSpec& chain, std::span<const Complex> mus);

struct SolveOptions {
  int max_starts = 1200;
  int max_newton_iters = 120;
  int max_damping_halvings = 30;
  double defect_tol = 1e-11;         // normalized
  double eigen_tol = 1e-8;
  double norm_floor = 1e-10;         // reject candidates with vanishing Bethe vector
  double pair_bracket_floor = 1e-8;  // [mu_i - mu_j +- gamma] degeneracy guard
};

// Damped Newton on G with the analytic Jacobian, multi-start seeded near the
// nu cloud shifted by multiples of gamma/2. Roots are reduced mod i*pi
// (brackets are i*pi-antiperiodic), deduplicated as unordered sets, and every
// returned solution passes the dense eigenstate check. Deterministic in
// cfg.seed. Throws SolverExhaustedError when nothing admissible is found.
std::vector<BetheSolution> solve_bethe(const xxz::ChainSpec& chain, int n,
                                       const SampleConfig& cfg, int max_solutions,
                                       const SolveOptions& opt = {});

// Closed form for L = 1, N = 1: mu = nu + (i*pi - gamma)/2 mod i*pi.
Complex single_site_root(const xxz::ChainSpec& chain);

// Representative of mu mod i*pi with Im in (-pi/2, pi/2].
Complex normalize_mod_ipi(Complex mu);

}  // namespace taubethe::bethe

#endif
