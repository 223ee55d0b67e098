#ifndef TAUBETHE_XXZ_CHAIN_HPP
#define TAUBETHE_XXZ_CHAIN_HPP

#include <vector>

#include "taubethe/core/types.hpp"

namespace taubethe::xxz {

// Periodic inhomogeneous XXZ spin-1/2 chain: site count, un-exponentiated
// quantum-space rapidities nu_1..nu_L, crossing parameter gamma.
struct ChainSpec {
  std::vector<Complex> nu;
  Complex gamma;

  static constexpr int kMaxSites = 12;  // dense 2^L operators stay desk-scale

  int sites() const { return static_cast<int>(nu.size()); }
  std::size_t dim() const { return std::size_t{1} << nu.size(); }

  void validate(double min_separation = 1e-8) const {
    if (nu.empty()) throw DimensionError("ChainSpec: need at least one site");
    if (sites() > kMaxSites)
      throw DimensionError("ChainSpec: L exceeds the dense-operator cap");
    for (std::size_t i = 0; i < nu.size(); ++i)
      for (std::size_t j = i + 1; j < nu.size(); ++j)
        if (std::abs(nu[i] - nu[j]) < min_separation)
          throw DegenerateInputError("ChainSpec: coincident inhomogeneities");
    if (std::abs(bracket(gamma)) < min_separation)
      throw DegenerateInputError("ChainSpec: bracket(gamma) ~ 0");
  }
};

}  // namespace taubethe::xxz

#endif
