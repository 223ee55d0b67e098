#ifndef TAUBETHE_SYMFUN_SYMFUN_HPP
#define TAUBETHE_SYMFUN_SYMFUN_HPP

#include <functional>

#include "taubethe/symfun/multiset.hpp"
#include "taubethe/symfun/partition.hpp"

namespace taubethe::symfun {

// Coefficient of k^i in prod_v (1 + v k)^{mult}; 0 for i < 0 and i > total().
Complex elem_sym(const MiwaMultiset& x, int i);
// Coefficient of k^i in prod_v (1 - v k)^{-mult}; 0 for i < 0, h_0 = 1.
Complex complete_sym(const MiwaMultiset& x, int i);

// h_0..h_maxdeg in one pass (Newton recurrence on multiplicity-weighted power
// sums, O(maxdeg^2)).
std::vector<Complex> complete_sym_upto(const MiwaMultiset& x, int maxdeg);
std::vector<Complex> elem_sym_upto(const MiwaMultiset& x, int maxdeg);

// Family of symmetric functions indexed by an integer degree, e.g. complete_sym.
using DegreeEvaluator = std::function<Complex(const MiwaMultiset&, int)>;

// Forward difference in variable m: i -> (f(x, i) - f(x without one copy of
// x_m, i)) / x_m. For f = complete_sym this is i -> h_{i-1}{x}.
std::function<Complex(int)> discrete_derivative(const MiwaMultiset& x, std::size_t m,
                                                DegreeEvaluator f);

// det(x_i^{lambda_j - j + N}) / Vandermonde. Requires multiplicity-1 entries,
// pairwise distinct values.
Complex schur_bialternant(const Partition& lam, const MiwaMultiset& x,
                          const Tolerance& tol = {});

// det(h_{lambda_i - i + j}) over an n x n window; n defaults to
// max(length, 1) and the value is window-size independent.
Complex schur_jacobi_trudi(const Partition& lam, const MiwaMultiset& x);
Complex schur_jacobi_trudi(const Partition& lam, const MiwaMultiset& x, int window);

// KP time variables t_1..t_M, 1-based access.
struct TimesVector {
  std::vector<Complex> t;

  int size() const { return static_cast<int>(t.size()); }
  Complex at(int j) const {
    if (j < 1 || j > size()) throw ArityError("TimesVector: index out of range");
    return t[static_cast<std::size_t>(j) - 1];
  }
};

// Coefficient of k^i in exp(sum_j t_j k^j); 0 for i < 0, 1 for i = 0.
// Throws ArityError when t is shorter than i.
Complex char_one_row(const TimesVector& t, int i);
// det(chi_{lambda_i - i + j}{t}) over length(lambda) rows.
Complex char_poly(const Partition& lam, const TimesVector& t);

// t_j = sum_i m_i x_i^j / j.
Complex miwa_map(const MiwaMultiset& x, int j);
TimesVector miwa_times(const MiwaMultiset& x, int count);

Complex vandermonde(std::span<const Complex> xs);
Complex vandermonde_trig(std::span<const Complex> lams);

}  // namespace taubethe::symfun

#endif
