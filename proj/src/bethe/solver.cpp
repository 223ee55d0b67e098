#include "taubethe/bethe/solver.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <limits>
#include <numbers>

#include "taubethe/core/matrix.hpp"
#include "taubethe/xxz/oracle.hpp"

namespace taubethe::bethe {

namespace {

constexpr double kPi = std::numbers::pi;

struct DefectParts {
  // G_i = P_i Q_i - R_i S_i with the factor lists kept for the Jacobian.
  std::vector<Complex> value;
  std::vector<double> mass;
};

DefectParts defect_parts(const xxz::ChainSpec& chain, std::span<const Complex> mus) {
  const std::size_t n = mus.size();
  const Complex g = chain.gamma;
  DefectParts out;
  out.value.resize(n);
  out.mass.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex p = 1.0, q = 1.0, r = 1.0, s = 1.0;
    for (Complex nu : chain.nu) {
      p *= bracket(mus[i] - nu + g);
      r *= bracket(mus[i] - nu);
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      q *= bracket(mus[i] - mus[j] - g);
      s *= bracket(mus[i] - mus[j] + g);
    }
    out.value[i] = p * q - r * s;
    out.mass[i] = std::abs(p * q) + std::abs(r * s);
  }
  return out;
}

// d/dmu of a product of brackets, one factor replaced by its derivative.
Complex product_derivative(std::span<const Complex> args) {
  Complex total = 0.0;
  for (std::size_t k = 0; k < args.size(); ++k) {
    Complex term = bracket_deriv(args[k]);
    for (std::size_t l = 0; l < args.size(); ++l)
      if (l != k) term *= bracket(args[l]);
    total += term;
  }
  return total;
}

DenseMatrix jacobian(const xxz::ChainSpec& chain, std::span<const Complex> mus) {
  const std::size_t n = mus.size();
  const Complex g = chain.gamma;
  DenseMatrix jac(n, n);
  std::vector<Complex> pa, qa, ra, sa;
  for (std::size_t i = 0; i < n; ++i) {
    pa.clear(); qa.clear(); ra.clear(); sa.clear();
    for (Complex nu : chain.nu) {
      pa.push_back(mus[i] - nu + g);
      ra.push_back(mus[i] - nu);
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      qa.push_back(mus[i] - mus[j] - g);
      sa.push_back(mus[i] - mus[j] + g);
    }
    auto prod = [](std::span<const Complex> args) {
      Complex v = 1.0;
      for (Complex a : args) v *= bracket(a);
      return v;
    };
    const Complex p = prod(pa), q = prod(qa), r = prod(ra), s = prod(sa);
    jac(i, i) = product_derivative(pa) * q + p * product_derivative(qa) -
                product_derivative(ra) * s - r * product_derivative(sa);
    // off-diagonal: only the pair factors depend on mu_k, with a sign flip
    std::size_t slot = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      Complex dq = -bracket_deriv(qa[slot]);
      Complex ds = -bracket_deriv(sa[slot]);
      for (std::size_t l = 0; l < qa.size(); ++l) {
        if (l == slot) continue;
        dq *= bracket(qa[l]);
        ds *= bracket(sa[l]);
      }
      jac(i, k) = p * dq - r * ds;
      ++slot;
    }
  }
  return jac;
}

// Solve jac * dx = -G by partial-pivot elimination.
bool newton_step(DenseMatrix jac, std::vector<Complex> rhs, std::vector<Complex>& dx) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = std::abs(jac(col, col));
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(jac(r, col)) > best) {
        best = std::abs(jac(r, col));
        piv = r;
      }
    if (best == 0.0) return false;
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(jac(piv, j), jac(col, j));
      std::swap(rhs[piv], rhs[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = jac(r, col) / jac(col, col);
      if (f == Complex(0.0)) continue;
      for (std::size_t j = col; j < n; ++j) jac(r, j) -= f * jac(col, j);
      rhs[r] -= f * rhs[col];
    }
  }
  dx.assign(n, Complex(0.0));
  for (std::size_t i = n; i-- > 0;) {
    Complex s = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) s += jac(i, j) * dx[j];
    dx[i] = -s / jac(i, i);
  }
  return true;
}

double defect_mass_sum(const DefectParts& d) {
  double s = 0.0;
  for (Complex v : d.value) s += std::abs(v);
  return s;
}

}  // namespace

std::vector<Complex> bethe_defect(const xxz::ChainSpec& chain,
                                  std::span<const Complex> mus) {
  for (std::size_t i = 0; i < mus.size(); ++i)
    for (std::size_t j = i + 1; j < mus.size(); ++j)
      if (mus[i] == mus[j])
        throw DegenerateInputError("bethe_defect: coincident rapidities");
  return defect_parts(chain, mus).value;
}

double bethe_defect_norm(const xxz::ChainSpec& chain, std::span<const Complex> mus) {
  const DefectParts d = defect_parts(chain, mus);
  double worst = 0.0;
  for (std::size_t i = 0; i < d.value.size(); ++i)
    worst = std::max(worst, std::abs(d.value[i]) / std::max(d.mass[i], 1e-300));
  return worst;
}

Complex normalize_mod_ipi(Complex mu) {
  double im = mu.imag();
  while (im > kPi / 2.0) im -= kPi;
  while (im <= -kPi / 2.0) im += kPi;
  return {mu.real(), im};
}

Complex single_site_root(const xxz::ChainSpec& chain) {
  if (chain.sites() != 1)
    throw DimensionError("single_site_root: defined for L = 1");
  return normalize_mod_ipi(chain.nu[0] + (Complex(0.0, kPi) - chain.gamma) / 2.0);
}

std::vector<BetheSolution> solve_bethe(const xxz::ChainSpec& chain, int n,
                                       const SampleConfig& cfg, int max_solutions,
                                       const SolveOptions& opt) {
  chain.validate();
  if (n < 1 || n > chain.sites())
    throw DimensionError("solve_bethe: need 1 <= n <= L");
  if (max_solutions < 1)
    throw std::invalid_argument("solve_bethe: max_solutions must be >= 1");

  Rng rng(cfg.seed);
  const Complex g = chain.gamma;
  std::vector<BetheSolution> found;
  double best_defect = std::numeric_limits<double>::infinity();
  int candidates = 0;

  const Complex probe =
      Complex(0.9, 0.3) + Complex(0.013, 0.007) * static_cast<double>(chain.sites());

  for (int start = 0; start < opt.max_starts; ++start) {
    if (static_cast<int>(found.size()) >= max_solutions) break;
    // seed near the nu cloud, shifted by random multiples of gamma/2; the
    // imaginary jitter spans the full (-pi/2, pi/2] fundamental strip
    std::vector<Complex> mus(static_cast<std::size_t>(n));
    for (auto& mu : mus) {
      const Complex center = chain.nu[rng.below(chain.nu.size())];
      const double shift = static_cast<double>(static_cast<int>(rng.below(5)) - 2);
      const double jre = rng.uniform(-1.0, 1.0);
      const double jim = rng.uniform(-1.7, 1.7);
      mu = center + Complex(jre, jim) + shift * g / 2.0;
    }

    for (int iter = 0; iter < opt.max_newton_iters; ++iter) {
      DefectParts d = defect_parts(chain, mus);
      double ndef = 0.0;
      for (std::size_t i = 0; i < mus.size(); ++i)
        ndef = std::max(ndef, std::abs(d.value[i]) / std::max(d.mass[i], 1e-300));
      if (ndef < 1e-13) break;
      std::vector<Complex> dx;
      if (!newton_step(jacobian(chain, mus), d.value, dx)) break;
      const double base = defect_mass_sum(d);
      double alpha = 1.0;
      bool improved = false;
      for (int h = 0; h <= opt.max_damping_halvings; ++h) {
        std::vector<Complex> trial = mus;
        for (std::size_t i = 0; i < trial.size(); ++i) trial[i] += alpha * dx[i];
        if (defect_mass_sum(defect_parts(chain, trial)) < base) {
          mus = std::move(trial);
          improved = true;
          break;
        }
        alpha /= 2.0;
      }
      if (!improved) break;
    }

    const double ndef = bethe_defect_norm(chain, mus);
    best_defect = std::min(best_defect, ndef);
    if (ndef > opt.defect_tol) continue;
    ++candidates;

    for (auto& mu : mus) mu = normalize_mod_ipi(mu);
    std::sort(mus.begin(), mus.end(), [](Complex a, Complex b) {
      if (a.real() != b.real()) return a.real() < b.real();
      return a.imag() < b.imag();
    });

    // BetheSolution invariants: distinct roots, pair brackets non-degenerate.
    // Near-string pairs (mu_i - mu_j close to +-(gamma + i pi)) are legitimate
    // solutions, so the bracket floor guards exact degeneracy only.
    bool admissible = true;
    for (std::size_t i = 0; i < mus.size() && admissible; ++i)
      for (std::size_t j = i + 1; j < mus.size() && admissible; ++j)
        if (std::abs(mus[i] - mus[j]) < cfg.min_separation ||
            std::abs(bracket(mus[i] - mus[j] + g)) < opt.pair_bracket_floor ||
            std::abs(bracket(mus[i] - mus[j] - g)) < opt.pair_bracket_floor)
          admissible = false;
    if (!admissible) continue;

    bool duplicate = false;
    for (const auto& sol : found) {
      double dist = 0.0;
      for (std::size_t i = 0; i < mus.size(); ++i)
        dist = std::max(dist, std::abs(mus[i] - sol.mus[i]));
      if (dist < cfg.min_separation) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;

    // spurious polynomial-system roots have vanishing Bethe vectors
    xxz::StateVector v = xxz::build_state(chain, mus);
    if (xxz::norm(v) < opt.norm_floor) continue;
    xxz::EigenCheck ec = xxz::eigenstate_check(chain, mus, probe);
    if (ec.residual > opt.eigen_tol) continue;

    found.push_back({std::move(mus), ndef, ec.residual});
  }

  if (found.empty()) {
    char defect_str[32];
    std::snprintf(defect_str, sizeof defect_str, "%.3e", best_defect);
    throw SolverExhaustedError(
        "solve_bethe: no admissible solution in " + std::to_string(opt.max_starts) +
            " starts (" + std::to_string(candidates) +
            " converged candidates were spurious); best normalized defect " + defect_str,
        best_defect, candidates);
  }

  std::sort(found.begin(), found.end(), [](const BetheSolution& a, const BetheSolution& b) {
    for (std::size_t i = 0; i < a.mus.size(); ++i) {
      if (a.mus[i].real() != b.mus[i].real()) return a.mus[i].real() < b.mus[i].real();
      if (a.mus[i].imag() != b.mus[i].imag()) return a.mus[i].imag() < b.mus[i].imag();
    }
    return false;
  });
  return found;
}

}  // namespace taubethe::bethe
