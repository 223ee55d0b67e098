#ifndef TAUBETHE_VERIFY_RUNNER_HPP
#define TAUBETHE_VERIFY_RUNNER_HPP

#include "taubethe/bethe/solver.hpp"
#include "taubethe/verify/config.hpp"
#include "taubethe/verify/report.hpp"
#include "taubethe/xxz/chain.hpp"

namespace taubethe::verify {

// L distinct real inhomogeneities in (0.1, 1.0), deterministic in seed.
std::vector<Complex> auto_inhomogeneities(int sites, std::uint64_t seed);

xxz::ChainSpec build_chain(const RunConfig& cfg);

// Lambda samples that keep every bracket in Slavnov's Omega away from its
// poles (forbidden set includes the root and inhomogeneity pole preimages and
// their +-i*pi translates).
std::vector<std::vector<Complex>> sample_lambda_sets(const xxz::ChainSpec& chain,
                                                     const bethe::BetheSolution& sol,
                                                     int count, std::uint64_t seed);

std::vector<std::vector<Complex>> sample_x_sets(int n, int count, std::uint64_t seed);

double check_threshold(const std::string& name);

// Assembles fixtures (chain, Bethe solutions, Casoratian data), executes the
// selected checks, returns the report. Solver or sampling failures become
// structured failure records, not exceptions.
Report run_verify(const RunConfig& cfg);

}  // namespace taubethe::verify

#endif
