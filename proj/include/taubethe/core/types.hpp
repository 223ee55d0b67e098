#ifndef TAUBETHE_CORE_TYPES_HPP
#define TAUBETHE_CORE_TYPES_HPP

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <string>

namespace taubethe {

using Complex = std::complex<double>;

// [u] = e^u - e^{-u}
inline Complex bracket(Complex u) { return std::exp(u) - std::exp(-u); }
inline Complex bracket_deriv(Complex u) { return std::exp(u) + std::exp(-u); }

// Relative tolerance with a magnitude floor against division by ~0.
struct Tolerance {
  double rel = 1e-8;
  double abs_floor = 1e-300;

  void validate() const {
    if (!(rel > 0.0) || !(rel < 1.0))
      throw std::invalid_argument("Tolerance: rel must be in (0,1)");
    if (!(abs_floor > 0.0))
      throw std::invalid_argument("Tolerance: abs_floor must be positive");
  }
};

inline bool approx_equal(Complex a, Complex b, const Tolerance& tol, double scale = 0.0) {
  if (scale < 0.0) throw std::invalid_argument("approx_equal: scale must be >= 0");
  const double ref = std::max({std::abs(a), std::abs(b), scale, tol.abs_floor});
  return std::abs(a - b) <= tol.rel * ref;
}

// Normalized residual of an identity sum_k T_k = 0: |sum| / max(sum |T_k|, floor).
inline double residual_of_terms(std::span<const Complex> terms, double abs_floor = 1e-300) {
  Complex s = 0.0;
  double mass = 0.0;
  for (Complex t : terms) {
    s += t;
    mass += std::abs(t);
  }
  return std::abs(s) / std::max(mass, abs_floor);
}

inline double residual_pair(Complex lhs, Complex rhs, double abs_floor = 1e-300) {
  const Complex terms[2] = {lhs, -rhs};
  return residual_of_terms(terms, abs_floor);
}

// Error taxonomy. Every failure mode a caller may want to branch on gets its own type.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct SamplingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DivisionByZeroError : std::domain_error {
  using std::domain_error::domain_error;
};
struct MissingVariableError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct VandermondeSingularError : std::domain_error {
  using std::domain_error::domain_error;
};
struct ArityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DegenerateInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DegenerateStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateSampleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolverExhaustedError : std::runtime_error {
  double best_defect;
  int candidates_seen;
  SolverExhaustedError(const std::string& msg, double best, int seen)
      : std::runtime_error(msg), best_defect(best), candidates_seen(seen) {}
};

struct ResampleNeededError : std::runtime_error {
  int lambda_index;  // 1-based offending pair
  int mu_index;
  ResampleNeededError(const std::string& msg, int li, int mi)
      : std::runtime_error(msg), lambda_index(li), mu_index(mi) {}
};

}  // namespace taubethe

#endif
