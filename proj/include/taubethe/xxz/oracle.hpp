#ifndef TAUBETHE_XXZ_ORACLE_HPP
#define TAUBETHE_XXZ_ORACLE_HPP

#include <span>

#include "taubethe/core/matrix.hpp"
#include "taubethe/xxz/chain.hpp"

namespace taubethe::xxz {

using StateVector = std::vector<Complex>;

// 4x4 L-operator, auxiliary index major (basis |a i> with up = 0):
//   [l-n+g]    .       .      .
//      .     [l-n]    [g]     .
//      .      [g]    [l-n]    .
//      .       .       .   [l-n+g]
DenseMatrix l_operator(Complex lam, Complex nu, Complex gamma);

// The 2x2 auxiliary-space blocks of prod_{i=1..L} L_{a i}(lam, nu_i) as dense
// operators on the 2^L quantum space. Site 1 is the leftmost factor and the
// most significant qubit.
struct MonodromyBlocks {
  DenseMatrix a, b, c, d;
};
MonodromyBlocks monodromy(const ChainSpec& chain, Complex lam);

// A(lam) + D(lam).
DenseMatrix transfer(const ChainSpec& chain, Complex lam);

// B(mu_1)...B(mu_N)|0>, reference all-up. N > L gives the zero vector.
StateVector build_state(const ChainSpec& chain, std::span<const Complex> mus);
// Row vector <0|C(lam_1)...C(lam_N), returned as its coefficient vector.
StateVector build_dual_state(const ChainSpec& chain, std::span<const Complex> lams);

// <0| C(lam_1)..C(lam_N) B(mu_1)..B(mu_N) |0> by dense contraction.
Complex scalar_product_oracle(const ChainSpec& chain, std::span<const Complex> lams,
                              std::span<const Complex> mus);

struct EigenCheck {
  double residual;     // ||T v - E v|| / ||T v||
  Complex eigenvalue;  // Rayleigh quotient
};
// Throws DegenerateStateError when the state norm is below the floor.
EigenCheck eigenstate_check(const ChainSpec& chain, std::span<const Complex> mus,
                            Complex lam_probe, double norm_floor = 1e-300);

double norm(std::span<const Complex> v);

}  // namespace taubethe::xxz

#endif
