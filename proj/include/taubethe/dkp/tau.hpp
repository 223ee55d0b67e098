#ifndef TAUBETHE_DKP_TAU_HPP
#define TAUBETHE_DKP_TAU_HPP

#include <array>
#include <span>

#include "taubethe/core/matrix.hpp"
#include "taubethe/slavnov/slavnov.hpp"
#include "taubethe/symfun/multiset.hpp"

namespace taubethe::dkp {

using symfun::MiwaMultiset;

// tau = det(omega_ij)_{i,j=1..N} with omega_ij = sum_k c_ik h_{k-j}{base}.
// The coefficient matrix may come from a Bethe fixture (CasoratianSpec) or be
// any caller-supplied full-row-rank N x (N+L-1) matrix.
struct TauFunction {
  DenseMatrix c;  // N x width
  MiwaMultiset base;

  int n() const { return static_cast<int>(c.rows()); }
  int width() const { return static_cast<int>(c.cols()); }
};

TauFunction make_tau(const slavnov::CasoratianSpec& spec, MiwaMultiset base);

// Distinct indices into base whose multiplicities get raised by one.
struct ShiftList {
  std::vector<std::size_t> indices;
};

Complex tau(const TauFunction& tf);
Complex tau_shift(const TauFunction& tf, const ShiftList& s);

// omega_ij and whole columns at an arbitrary multiset (1-based i, j).
Complex omega_entry(const TauFunction& tf, int i, int j, const MiwaMultiset& at);
std::vector<Complex> omega_column(const TauFunction& tf, int j, const MiwaMultiset& at);

struct IdentityResidual {
  double value = 0.0;
  bool degenerate = false;  // coincident chosen values: trivially satisfied
};

// x_v^{n-2} tau^{[v]} = |omega_1 .. omega_{N-1} omega_{N-n+2}^{[v]}|,
// 2 <= n <= N; var is the 0-based distinguished variable.
IdentityResidual identity_A1_residual(const TauFunction& tf, int n, std::size_t var = 0);

// prod_{r<s<=n}(x_r - x_s) tau^{[1..n]} =
// |omega_1 .. omega_{N-n} omega_{N-n+1}^{[n]} .. omega_{N-n+1}^{[1]}|,
// on the first n base variables.
IdentityResidual identity_A2_residual(const TauFunction& tf, int n);

// Whether tau_{-i} shifts the chosen subset minus i (matches the cofactor
// expansion of the bilinear determinant, the reading used throughout) or all
// base variables minus i (the literal full-list notation, kept for
// comparison).
enum class ShiftScope { chosen_subset, full_base };

// n x n determinant with rows (1, x_i, .., x_i^{n-2}, x_i^{n-2} tau_{+i} tau_{-i}),
// vars are 0-based base indices, 3 <= n <= N.
IdentityResidual bilinear_det_residual(const TauFunction& tf,
                                       std::span<const std::size_t> vars,
                                       ShiftScope scope = ShiftScope::chosen_subset);

// The three cofactor terms of the bilinear determinant along its last column.
std::array<Complex, 3> bilinear_expansion_terms(const TauFunction& tf,
                                                std::array<std::size_t, 3> triple,
                                                ShiftScope scope = ShiftScope::chosen_subset);

// x_i (x_j - x_k) tau{m_i+1} tau{m_j+1, m_k+1} + cyclic = 0.
IdentityResidual hirota_miwa_residual(const TauFunction& tf,
                                      std::array<std::size_t, 3> triple);
std::array<Complex, 3> hirota_miwa_terms(const TauFunction& tf,
                                         std::array<std::size_t, 3> triple);

// sum_nu (-1)^{nu-1} x_nu^{n-2} tau^{[nu]} prod_{r<s<=n; r,s != nu}(x_r - x_s)
// tau^{[1..^nu..n]} = 0, on the first n base variables.
IdentityResidual laplace_identity_residual(const TauFunction& tf, int n);

// Direct evaluation of the 2N x 2N determinant that generates the Laplace
// identity; returns |det| / max(permanent of absolute values, floor).
double two_n_determinant_residual(const TauFunction& tf, int n);

}  // namespace taubethe::dkp

#endif
