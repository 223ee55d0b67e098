#include "taubethe/slavnov/slavnov.hpp"

#include <cmath>

#include "taubethe/symfun/symfun.hpp"
#include "taubethe/xxz/oracle.hpp"

namespace taubethe::slavnov {

using symfun::MiwaMultiset;

ExponentiatedData ExponentiatedData::from_chain(const xxz::ChainSpec& chain,
                                                std::span<const Complex> lams,
                                                std::span<const Complex> mus) {
  ExponentiatedData d;
  d.x.reserve(lams.size());
  d.y.reserve(mus.size());
  d.z.reserve(chain.nu.size());
  for (Complex l : lams) d.x.push_back(std::exp(2.0 * l));
  for (Complex m : mus) d.y.push_back(std::exp(2.0 * m));
  for (Complex n : chain.nu) d.z.push_back(std::exp(2.0 * n));
  d.q = std::exp(chain.gamma);
  return d;
}

Complex slavnov_det(const xxz::ChainSpec& chain, std::span<const Complex> lams,
                    const bethe::BetheSolution& sol, double pole_floor) {
  const std::size_t n = lams.size();
  if (n != sol.mus.size())
    throw DimensionError("slavnov_det: lambda count differs from Bethe root count");
  const Complex g = chain.gamma;
  const auto& mus = sol.mus;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(bracket(lams[i] - mus[j])) < pole_floor ||
          std::abs(bracket(lams[i] - mus[j] + g)) < pole_floor ||
          std::abs(bracket(lams[i] - mus[j] - g)) < pole_floor)
        throw ResampleNeededError("slavnov_det: lambda_" + std::to_string(i + 1) +
                                      " is on a pole of Omega against mu_" +
                                      std::to_string(j + 1),
                                  static_cast<int>(i + 1), static_cast<int>(j + 1));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (Complex nu : chain.nu)
      if (std::abs(bracket(lams[i] - nu)) < pole_floor)
        throw ResampleNeededError("slavnov_det: lambda_" + std::to_string(i + 1) +
                                      " collides with an inhomogeneity",
                                  static_cast<int>(i + 1), 0);

  Complex pref = std::pow(bracket(g), static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pref *= bracket(lams[i] - mus[j] + g);
  // standard orderings: prod_{j<k}[lam_k - lam_j] [mu_j - mu_k]
  Complex denom = 1.0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      denom *= bracket(lams[k] - lams[j]) * bracket(mus[j] - mus[k]);
  for (std::size_t k = 0; k < n; ++k)
    for (Complex nu : chain.nu) pref *= bracket(lams[k] - nu) * bracket(mus[k] - nu);

  DenseMatrix omega(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex row_ratio = 1.0;
    for (Complex nu : chain.nu)
      row_ratio *= bracket(lams[i] - nu + g) / bracket(lams[i] - nu);
    for (std::size_t l = 0; l < n; ++l)
      row_ratio *= bracket(lams[i] - mus[l] - g) / bracket(lams[i] - mus[l] + g);
    for (std::size_t j = 0; j < n; ++j) {
      const Complex t1 =
          1.0 / (bracket(lams[i] - mus[j]) * bracket(lams[i] - mus[j] + g));
      const Complex t2 =
          row_ratio / (bracket(mus[j] - lams[i]) * bracket(mus[j] - lams[i] + g));
      omega(i, j) = t1 - t2;
    }
  }
  return pref / denom * determinant(omega);
}

Complex rho(const ExponentiatedData& data, int l, int j) {
  const int n = data.n();
  const int sites = data.sites();
  if (j < 1 || j > n) throw ArityError("rho: column index out of range");
  if (l < 1 || l > data.width()) throw ArityError("rho: row index out of range");
  const Complex q = data.q;
  const Complex q2 = q * q;
  const Complex yj = data.y[static_cast<std::size_t>(j) - 1];
  const int degree = sites + n - l;

  Complex zfac_minus = 1.0, zfac_plus = 1.0;
  for (Complex zm : data.z) {
    zfac_minus *= yj * q - zm / q;
    zfac_plus *= yj * q - zm * q;
  }
  Complex yfac_plus = 1.0, yfac_minus = 1.0;
  std::vector<symfun::MiwaEntry> set1, set2;
  set1.reserve(static_cast<std::size_t>(n - 1 + sites));
  set2.reserve(static_cast<std::size_t>(n - 1 + sites));
  for (int m = 1; m <= n; ++m) {
    if (m == j) continue;
    const Complex ym = data.y[static_cast<std::size_t>(m) - 1];
    yfac_plus *= yj - ym * q2;
    yfac_minus *= yj - ym / q2;
    set1.push_back({-ym / q2, 1});
    set2.push_back({-ym * q2, 1});
  }
  for (Complex zm : data.z) {
    set1.push_back({-zm, 1});
    set2.push_back({-zm / q2, 1});
  }
  const Complex e1 = symfun::elem_sym(MiwaMultiset(std::move(set1)), degree);
  const Complex e2 = symfun::elem_sym(MiwaMultiset(std::move(set2)), degree);
  return zfac_minus * yfac_plus * e1 - zfac_plus * yfac_minus * e2;
}

Complex kappa(const ExponentiatedData& data, int k, int j) {
  if (k < 1 || k > data.width()) throw ArityError("kappa: row index out of range");
  const Complex yj = data.y[static_cast<std::size_t>(j) - 1];
  Complex s = 0.0;
  // y_j^{l-k-1} for l = 1..k: build the power iteratively from y^{-k}
  Complex pw = std::pow(yj, -static_cast<double>(k));
  for (int l = 1; l <= k; ++l) {
    s += pw * rho(data, l, j);
    pw *= yj;
  }
  return -s;
}

DenseMatrix kappa_matrix(const ExponentiatedData& data) {
  const int w = data.width();
  const int n = data.n();
  DenseMatrix kap(static_cast<std::size_t>(w), static_cast<std::size_t>(n));
  // reuse the rho table instead of re-deriving per (k, j)
  for (int j = 1; j <= n; ++j) {
    std::vector<Complex> rho_col(static_cast<std::size_t>(w) + 1);
    for (int l = 1; l <= w; ++l) rho_col[static_cast<std::size_t>(l)] = rho(data, l, j);
    const Complex yj = data.y[static_cast<std::size_t>(j) - 1];
    for (int k = 1; k <= w; ++k) {
      Complex s = 0.0;
      Complex pw = std::pow(yj, -static_cast<double>(k));
      for (int l = 1; l <= k; ++l) {
        s += pw * rho_col[static_cast<std::size_t>(l)];
        pw *= yj;
      }
      kap(k - 1, j - 1) = -s;
    }
  }
  return kap;
}

CasoratianSpec casoratian_spec(const ExponentiatedData& data) {
  const DenseMatrix kap = kappa_matrix(data);
  CasoratianSpec spec;
  spec.n = data.n();
  spec.width = data.width();
  spec.c = DenseMatrix(static_cast<std::size_t>(spec.n), static_cast<std::size_t>(spec.width));
  for (int i = 0; i < spec.n; ++i)
    for (int k = 0; k < spec.width; ++k) spec.c(i, k) = kap(k, i);
  const std::vector<double> sv = singular_values(spec.c);
  spec.smallest_singular_value = sv.empty() ? 0.0 : sv.back();
  spec.kappa_cancellation = 1.0;
  for (int j = 1; j <= spec.n; ++j) {
    const Complex yj = data.y[static_cast<std::size_t>(j) - 1];
    for (int k = 1; k <= spec.width; ++k) {
      double msum = 0.0;
      Complex pw = std::pow(yj, -static_cast<double>(k));
      for (int l = 1; l <= k; ++l) {
        msum += std::abs(pw * rho(data, l, j));
        pw *= yj;
      }
      spec.kappa_cancellation = std::min(
          spec.kappa_cancellation, std::abs(kap(k - 1, j - 1)) / std::max(msum, 1e-300));
    }
  }
  return spec;
}

Complex rewritten_omega_det(const ExponentiatedData& data, std::span<const Complex> xs) {
  const int n = data.n();
  if (static_cast<int>(xs.size()) != n)
    throw DimensionError("rewritten_omega_det: need N x-values");
  const DenseMatrix kap = kappa_matrix(data);
  DenseMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex s = 0.0;
      Complex pw = 1.0;
      for (int k = 1; k <= data.width(); ++k) {
        s += pw * kap(k - 1, j);
        pw *= xs[static_cast<std::size_t>(i)];
      }
      m(i, j) = s;
    }
  }
  return determinant(m);
}

Complex schur_expansion(const ExponentiatedData& data, std::span<const Complex> xs) {
  const int n = data.n();
  const int sites = data.sites();
  if (static_cast<int>(xs.size()) != n)
    throw DimensionError("schur_expansion: need N x-values");
  const DenseMatrix kap = kappa_matrix(data);
  Complex total = 0.0;
  for (const symfun::Partition& lam : symfun::partitions_in_box(n, sites - 1)) {
    DenseMatrix mx(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    DenseMatrix mk(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const int expo = lam.row(static_cast<std::size_t>(j)) + n - j;
        mx(i - 1, j - 1) = std::pow(xs[static_cast<std::size_t>(i) - 1], expo);
        const int krow = lam.row(static_cast<std::size_t>(i)) + n + 1 - i;
        mk(i - 1, j - 1) = kap(krow - 1, j - 1);
      }
    }
    total += determinant(mx) * determinant(mk);
  }
  return total;
}

Complex casoratian_det(const CasoratianSpec& spec, std::span<const Complex> xs) {
  return casoratian_det_with_error(spec, xs).value;
}

CasoratianValue casoratian_det_with_error(const CasoratianSpec& spec,
                                          std::span<const Complex> xs) {
  const MiwaMultiset base = MiwaMultiset::distinct(xs);
  const std::vector<Complex> h = symfun::complete_sym_upto(base, spec.width);
  const std::size_t n = static_cast<std::size_t>(spec.n);
  DenseMatrix m(n, n);
  DenseMatrix mass(n, n);
  for (int i = 1; i <= spec.n; ++i)
    for (int j = 1; j <= spec.n; ++j) {
      Complex s = 0.0;
      double a = 0.0;
      for (int k = j; k <= spec.width; ++k) {
        const Complex term = spec.c(i - 1, k - 1) * h[static_cast<std::size_t>(k - j)];
        s += term;
        a += std::abs(term);
      }
      m(i - 1, j - 1) = s;
      mass(i - 1, j - 1) = a;
    }
  const Complex det = determinant(m);
  // d(det) = sum_ij cof_ij d(omega_ij); each entry inherits the relative
  // error of the coefficients (eps / kappa_cancellation) over its term mass
  const double entry_rel = 2.3e-16 / std::min(spec.kappa_cancellation, 1.0);
  double err = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      DenseMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, ri = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, ci = 0; c < n; ++c) {
          if (c == j) continue;
          minor(ri, ci++) = m(r, c);
        }
        ++ri;
      }
      err += std::abs(determinant(minor)) * std::abs(mass(i, j));
    }
  err *= static_cast<double>(n) * entry_rel;
  return {det, err};
}

RecenteredFixture recenter(const xxz::ChainSpec& chain, std::span<const Complex> mus) {
  double delta = 0.0;
  for (Complex m : mus) delta += m.real();
  if (!mus.empty()) delta /= static_cast<double>(mus.size());
  RecenteredFixture out;
  out.delta = delta;
  out.chain = chain;
  for (auto& nu : out.chain.nu) nu -= delta;
  out.mus.assign(mus.begin(), mus.end());
  for (auto& m : out.mus) m -= delta;
  return out;
}

CasoratianSpec casoratian_spec_recentered(const xxz::ChainSpec& chain,
                                          std::span<const Complex> mus) {
  const RecenteredFixture rec = recenter(chain, mus);
  return casoratian_spec(
      ExponentiatedData::from_chain(rec.chain, std::vector<Complex>{}, rec.mus));
}

RatioConstancy ratio_constancy(const xxz::ChainSpec& chain, const bethe::BetheSolution& sol,
                               const std::vector<std::vector<Complex>>& x_samples,
                               bool compensate, double tolerance) {
  if (x_samples.size() < 2)
    throw std::invalid_argument("ratio_constancy: need at least two x-samples");
  const int sites = chain.sites();
  const RecenteredFixture rec = recenter(chain, sol.mus);
  const ExponentiatedData data0 =
      ExponentiatedData::from_chain(rec.chain, std::vector<Complex>{}, rec.mus);
  const CasoratianSpec spec = casoratian_spec(data0);

  std::vector<Complex> ratios;
  ratios.reserve(x_samples.size());
  std::vector<Complex> lams, xs_shifted;
  double tau_err = 0.0;
  for (const auto& xs : x_samples) {
    if (static_cast<int>(xs.size()) != data0.n())
      throw DimensionError("ratio_constancy: x-sample of wrong size");
    lams.clear();
    xs_shifted.clear();
    Complex monomial = 1.0;
    for (Complex x : xs) {
      // lambda = Log(x)/2, then the whole fixture shifts by -delta; the shift
      // multiplies oracle, monomial and tau by sample-independent constants
      const Complex lam = 0.5 * std::log(x) - rec.delta;
      lams.push_back(lam);
      xs_shifted.push_back(std::exp(2.0 * lam));
      monomial *= std::exp(static_cast<double>(sites - 1) * lam);
    }
    const Complex oracle = xxz::scalar_product_oracle(rec.chain, lams, rec.mus);
    const CasoratianValue tau = casoratian_det_with_error(spec, xs_shifted);
    if (std::abs(tau.value) < 1e-300)
      throw DegenerateSampleError("ratio_constancy: Casoratian determinant ~ 0");
    tau_err = std::max(tau_err, tau.error_bound / std::abs(tau.value));
    ratios.push_back(compensate ? oracle * monomial / tau.value : oracle / tau.value);
  }
  Complex mean = 0.0;
  for (Complex r : ratios) mean += r;
  mean /= static_cast<double>(ratios.size());
  double spread = 0.0;
  for (Complex r : ratios)
    spread = std::max(spread, std::abs(r - mean) / std::max(std::abs(mean), 1e-300));
  // the forward bound is pessimistic for healthy coefficients but can miss
  // compounded amplification when the kappa sums cancel deeply, so both
  // indicators gate the comparison
  const bool resolvable =
      tau_err <= tolerance && spec.kappa_cancellation >= 1e-5;
  return {mean, spread, tau_err, resolvable};
}

}  // namespace taubethe::slavnov
