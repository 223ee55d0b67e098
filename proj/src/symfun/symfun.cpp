#include "taubethe/symfun/symfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "taubethe/core/matrix.hpp"

namespace taubethe::symfun {

MiwaMultiset::MiwaMultiset(std::vector<MiwaEntry> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_)
    if (e.multiplicity < 0)
      throw std::invalid_argument("MiwaMultiset: negative multiplicity");
}

MiwaMultiset MiwaMultiset::distinct(std::span<const Complex> values) {
  std::vector<MiwaEntry> es;
  es.reserve(values.size());
  for (Complex v : values) es.push_back({v, 1});
  return MiwaMultiset(std::move(es));
}

int MiwaMultiset::total() const {
  int t = 0;
  for (const auto& e : entries_) t += e.multiplicity;
  return t;
}

double MiwaMultiset::min_pairwise_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < entries_.size(); ++i)
    for (std::size_t j = i + 1; j < entries_.size(); ++j)
      best = std::min(best, std::abs(entries_[i].value - entries_[j].value));
  return best;
}

bool MiwaMultiset::separated(double min_separation) const {
  return min_pairwise_distance() >= min_separation;
}

MiwaMultiset MiwaMultiset::with_shift(std::span<const std::size_t> indices) const {
  std::vector<MiwaEntry> es = entries_;
  for (std::size_t idx : indices) {
    if (idx >= es.size()) throw MissingVariableError("MiwaMultiset: shift index out of range");
    es[idx].multiplicity += 1;
  }
  return MiwaMultiset(std::move(es));
}

MiwaMultiset MiwaMultiset::with_one_added(std::size_t index) const {
  const std::size_t one[1] = {index};
  return with_shift(one);
}

MiwaMultiset MiwaMultiset::with_one_removed(std::size_t index) const {
  if (index >= entries_.size())
    throw MissingVariableError("MiwaMultiset: index out of range");
  if (entries_[index].multiplicity < 1)
    throw MissingVariableError("MiwaMultiset: entry has multiplicity 0");
  std::vector<MiwaEntry> es = entries_;
  es[index].multiplicity -= 1;
  return MiwaMultiset(std::move(es));
}

std::vector<Complex> MiwaMultiset::power_sums(int maxdeg) const {
  std::vector<Complex> p(static_cast<std::size_t>(std::max(maxdeg, 0)), Complex(0.0));
  for (const auto& e : entries_) {
    if (e.multiplicity == 0) continue;
    Complex pw = 1.0;
    for (int j = 1; j <= maxdeg; ++j) {
      pw *= e.value;
      p[static_cast<std::size_t>(j) - 1] += static_cast<double>(e.multiplicity) * pw;
    }
  }
  return p;
}

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 1) throw std::invalid_argument("Partition: rows must be positive");
    if (i + 1 < rows_.size() && rows_[i] < rows_[i + 1])
      throw std::invalid_argument("Partition: rows must be weakly decreasing");
  }
}

int Partition::size() const {
  int s = 0;
  for (int r : rows_) s += r;
  return s;
}

namespace {

void boxed_partitions(int rows_left, int maxpart, std::vector<int>& acc,
                      std::vector<Partition>& out) {
  if (rows_left == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int part = maxpart; part >= 0; --part) {
    acc.push_back(part);
    boxed_partitions(rows_left - 1, part, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int max_rows, int max_part) {
  std::vector<Partition> out;
  std::vector<int> acc;
  boxed_partitions(max_rows, max_part, acc, out);
  // rows ending in zeros collapse to the same normalized partition; dedupe
  std::sort(out.begin(), out.end(),
            [](const Partition& a, const Partition& b) { return a.rows() < b.rows(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Complex> complete_sym_upto(const MiwaMultiset& x, int maxdeg) {
  std::vector<Complex> h(static_cast<std::size_t>(std::max(maxdeg, 0)) + 1, Complex(0.0));
  h[0] = 1.0;
  if (maxdeg <= 0) return h;
  const std::vector<Complex> p = x.power_sums(maxdeg);
  for (int i = 1; i <= maxdeg; ++i) {
    Complex s = 0.0;
    for (int j = 1; j <= i; ++j) s += p[j - 1] * h[i - j];
    h[i] = s / static_cast<double>(i);
  }
  return h;
}

std::vector<Complex> elem_sym_upto(const MiwaMultiset& x, int maxdeg) {
  std::vector<Complex> e(static_cast<std::size_t>(std::max(maxdeg, 0)) + 1, Complex(0.0));
  e[0] = 1.0;
  if (maxdeg <= 0) return e;
  const std::vector<Complex> p = x.power_sums(maxdeg);
  const int cutoff = x.total();
  for (int i = 1; i <= maxdeg; ++i) {
    if (i > cutoff) {
      e[i] = 0.0;  // generating function is a polynomial of degree total()
      continue;
    }
    Complex s = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= i; ++j) {
      s += sign * p[j - 1] * e[i - j];
      sign = -sign;
    }
    e[i] = s / static_cast<double>(i);
  }
  return e;
}

Complex elem_sym(const MiwaMultiset& x, int i) {
  if (i < 0 || i > x.total()) return 0.0;
  return elem_sym_upto(x, i)[static_cast<std::size_t>(i)];
}

Complex complete_sym(const MiwaMultiset& x, int i) {
  if (i < 0) return 0.0;
  return complete_sym_upto(x, i)[static_cast<std::size_t>(i)];
}

std::function<Complex(int)> discrete_derivative(const MiwaMultiset& x, std::size_t m,
                                                DegreeEvaluator f) {
  if (m >= x.size()) throw MissingVariableError("discrete_derivative: no such variable");
  if (x.entry(m).multiplicity < 1)
    throw MissingVariableError("discrete_derivative: variable has multiplicity 0");
  const Complex xm = x.entry(m).value;
  if (xm == Complex(0.0))
    throw DivisionByZeroError("discrete_derivative: variable value is zero");
  MiwaMultiset reduced = x.with_one_removed(m);
  return [x, reduced = std::move(reduced), xm, f = std::move(f)](int i) {
    return (f(x, i) - f(reduced, i)) / xm;
  };
}

Complex schur_bialternant(const Partition& lam, const MiwaMultiset& x, const Tolerance& tol) {
  const std::size_t n = x.size();
  if (lam.length() > n)
    throw std::invalid_argument("schur_bialternant: partition longer than variable count");
  for (const auto& e : x.entries())
    if (e.multiplicity != 1)
      throw std::invalid_argument("schur_bialternant: multiplicities must all be 1");
  std::vector<Complex> vals(n);
  for (std::size_t i = 0; i < n; ++i) vals[i] = x.entry(i).value;
  const Complex delta = vandermonde(vals);
  double scale = 1.0;
  for (Complex v : vals) scale = std::max(scale, std::abs(v));
  if (std::abs(delta) <= tol.rel * scale)
    throw VandermondeSingularError(
        "schur_bialternant: coincident values (use schur_jacobi_trudi)");
  DenseMatrix mat(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const int expo = lam.row(j) - static_cast<int>(j) + static_cast<int>(n);
      mat(i, j - 1) = expo >= 0 ? std::pow(vals[i], expo) : Complex(0.0);
    }
  return determinant(mat) / delta;
}

Complex schur_jacobi_trudi(const Partition& lam, const MiwaMultiset& x) {
  return schur_jacobi_trudi(lam, x, std::max<int>(static_cast<int>(lam.length()), 1));
}

Complex schur_jacobi_trudi(const Partition& lam, const MiwaMultiset& x, int window) {
  if (window < static_cast<int>(lam.length()))
    throw std::invalid_argument("schur_jacobi_trudi: window smaller than partition length");
  if (window == 0) return 1.0;
  const int maxdeg = lam.row(1) + window;
  const std::vector<Complex> h = complete_sym_upto(x, std::max(maxdeg, 0));
  DenseMatrix mat(static_cast<std::size_t>(window), static_cast<std::size_t>(window));
  for (int i = 1; i <= window; ++i)
    for (int j = 1; j <= window; ++j) {
      const int deg = lam.row(static_cast<std::size_t>(i)) - i + j;
      mat(i - 1, j - 1) = (deg >= 0 && deg <= maxdeg) ? h[static_cast<std::size_t>(deg)]
                                                      : Complex(0.0);
    }
  return determinant(mat);
}

Complex char_one_row(const TimesVector& t, int i) {
  if (i < 0) return 0.0;
  if (i == 0) return 1.0;
  if (t.size() < i) throw ArityError("char_one_row: need t_1..t_i");
  // i chi_i = sum_{j=1..i} j t_j chi_{i-j}, from F' = (sum j t_j k^{j-1}) F
  std::vector<Complex> chi(static_cast<std::size_t>(i) + 1, Complex(0.0));
  chi[0] = 1.0;
  for (int m = 1; m <= i; ++m) {
    Complex s = 0.0;
    for (int j = 1; j <= m; ++j) s += static_cast<double>(j) * t.at(j) * chi[m - j];
    chi[m] = s / static_cast<double>(m);
  }
  return chi[static_cast<std::size_t>(i)];
}

Complex char_poly(const Partition& lam, const TimesVector& t) {
  const int r = static_cast<int>(lam.length());
  if (r == 0) return 1.0;
  DenseMatrix mat(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      mat(i - 1, j - 1) = char_one_row(t, lam.row(static_cast<std::size_t>(i)) - i + j);
  return determinant(mat);
}

Complex miwa_map(const MiwaMultiset& x, int j) {
  if (j < 1) throw std::invalid_argument("miwa_map: j must be >= 1");
  return x.power_sums(j)[static_cast<std::size_t>(j) - 1] / static_cast<double>(j);
}

TimesVector miwa_times(const MiwaMultiset& x, int count) {
  TimesVector tv;
  tv.t.reserve(static_cast<std::size_t>(std::max(count, 0)));
  const std::vector<Complex> p = x.power_sums(count);
  for (int j = 1; j <= count; ++j)
    tv.t.push_back(p[static_cast<std::size_t>(j) - 1] / static_cast<double>(j));
  return tv;
}

Complex vandermonde(std::span<const Complex> xs) {
  Complex v = 1.0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) v *= xs[i] - xs[j];
  return v;
}

Complex vandermonde_trig(std::span<const Complex> lams) {
  Complex v = 1.0;
  for (std::size_t i = 0; i < lams.size(); ++i)
    for (std::size_t j = i + 1; j < lams.size(); ++j) v *= bracket(lams[i] - lams[j]);
  return v;
}

}  // namespace taubethe::symfun
