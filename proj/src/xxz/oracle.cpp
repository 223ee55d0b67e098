#include "taubethe/xxz/oracle.hpp"

#include <cmath>

namespace taubethe::xxz {

DenseMatrix l_operator(Complex lam, Complex nu, Complex gamma) {
  DenseMatrix m(4, 4);
  const Complex corner = bracket(lam - nu + gamma);
  const Complex mid = bracket(lam - nu);
  const Complex g = bracket(gamma);
  m(0, 0) = corner;
  m(1, 1) = mid;
  m(1, 2) = g;
  m(2, 1) = g;
  m(2, 2) = mid;
  m(3, 3) = corner;
  return m;
}

namespace {

// Single-site 2x2 blocks of the L-operator in the quantum space (up = 0).
struct SiteBlocks {
  DenseMatrix a{2, 2}, b{2, 2}, c{2, 2}, d{2, 2};
};

SiteBlocks site_blocks(Complex lam, Complex nu, Complex gamma) {
  SiteBlocks s;
  const Complex corner = bracket(lam - nu + gamma);
  const Complex mid = bracket(lam - nu);
  const Complex g = bracket(gamma);
  s.a(0, 0) = corner;
  s.a(1, 1) = mid;
  s.b(1, 0) = g;  // lowers the site spin
  s.c(0, 1) = g;  // raises the site spin
  s.d(0, 0) = mid;
  s.d(1, 1) = corner;
  return s;
}

}  // namespace

MonodromyBlocks monodromy(const ChainSpec& chain, Complex lam) {
  chain.validate();
  MonodromyBlocks t{DenseMatrix::identity(1), DenseMatrix(1, 1), DenseMatrix(1, 1),
                    DenseMatrix::identity(1)};
  for (int site = 0; site < chain.sites(); ++site) {
    const SiteBlocks s = site_blocks(lam, chain.nu[static_cast<std::size_t>(site)],
                                     chain.gamma);
    // T <- T * L_site; operators at earlier sites commute with the new factor,
    // so each block product is a Kronecker product.
    MonodromyBlocks next{kron(t.a, s.a) + kron(t.b, s.c), kron(t.a, s.b) + kron(t.b, s.d),
                         kron(t.c, s.a) + kron(t.d, s.c), kron(t.c, s.b) + kron(t.d, s.d)};
    t = std::move(next);
  }
  return t;
}

DenseMatrix transfer(const ChainSpec& chain, Complex lam) {
  MonodromyBlocks t = monodromy(chain, lam);
  return t.a + t.d;
}

StateVector build_state(const ChainSpec& chain, std::span<const Complex> mus) {
  StateVector v(chain.dim(), Complex(0.0));
  v[0] = 1.0;
  for (std::size_t k = mus.size(); k-- > 0;) {
    MonodromyBlocks t = monodromy(chain, mus[k]);
    v = matvec(t.b, v);
  }
  return v;
}

StateVector build_dual_state(const ChainSpec& chain, std::span<const Complex> lams) {
  // <0| C(l_1)...C(l_N) as a row vector: apply transposes in reverse.
  StateVector v(chain.dim(), Complex(0.0));
  v[0] = 1.0;
  for (Complex lam : lams) {
    MonodromyBlocks t = monodromy(chain, lam);
    StateVector next(chain.dim(), Complex(0.0));
    for (std::size_t i = 0; i < chain.dim(); ++i) {
      if (v[i] == Complex(0.0)) continue;
      for (std::size_t j = 0; j < chain.dim(); ++j) next[j] += v[i] * t.c(i, j);
    }
    v = std::move(next);
  }
  return v;
}

Complex scalar_product_oracle(const ChainSpec& chain, std::span<const Complex> lams,
                              std::span<const Complex> mus) {
  if (lams.size() != mus.size())
    throw DimensionError("scalar_product_oracle: need equally many lambdas and mus");
  StateVector v = build_state(chain, mus);
  for (std::size_t k = lams.size(); k-- > 0;) {
    MonodromyBlocks t = monodromy(chain, lams[k]);
    v = matvec(t.c, v);
  }
  return v[0];
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (Complex z : v) s += std::norm(z);
  return std::sqrt(s);
}

EigenCheck eigenstate_check(const ChainSpec& chain, std::span<const Complex> mus,
                            Complex lam_probe, double norm_floor) {
  StateVector v = build_state(chain, mus);
  const double nv = norm(v);
  if (nv <= norm_floor)
    throw DegenerateStateError("eigenstate_check: state has (numerically) zero norm");
  DenseMatrix t = transfer(chain, lam_probe);
  StateVector tv = matvec(t, v);
  Complex num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    num += std::conj(v[i]) * tv[i];
    den += std::conj(v[i]) * v[i];
  }
  const Complex e = num / den;
  double diff = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) diff += std::norm(tv[i] - e * v[i]);
  const double ntv = norm(tv);
  return {std::sqrt(diff) / std::max(ntv, norm_floor), e};
}

}  // namespace taubethe::xxz
