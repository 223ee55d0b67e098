#include "taubethe/dkp/tau.hpp"

#include <algorithm>
#include <cmath>

#include "taubethe/symfun/symfun.hpp"

namespace taubethe::dkp {

namespace {

constexpr double kFloor = 1e-300;

std::vector<Complex> h_table(const MiwaMultiset& at, int width) {
  return symfun::complete_sym_upto(at, width);
}

Complex omega_from_h(const TauFunction& tf, int i, int j, const std::vector<Complex>& h) {
  Complex s = 0.0;
  for (int k = j; k <= tf.width(); ++k)
    s += tf.c(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(k) - 1) *
         h[static_cast<std::size_t>(k - j)];
  return s;
}

// Determinant whose columns are omega-columns evaluated at per-column
// multisets; column spec = (column index j, multiset).
struct ColumnSpec {
  int j;
  const MiwaMultiset* at;
};

Complex det_of_columns(const TauFunction& tf, std::span<const ColumnSpec> cols) {
  const int n = tf.n();
  if (static_cast<int>(cols.size()) != n)
    throw DimensionError("det_of_columns: need N columns");
  DenseMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int cidx = 0; cidx < n; ++cidx) {
    const std::vector<Complex> h = h_table(*cols[static_cast<std::size_t>(cidx)].at, tf.width());
    for (int i = 1; i <= n; ++i)
      m(i - 1, cidx) = omega_from_h(tf, i, cols[static_cast<std::size_t>(cidx)].j, h);
  }
  return determinant(m);
}

bool values_coincide(const TauFunction& tf, std::span<const std::size_t> idx,
                     double eps = 1e-12) {
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (std::abs(tf.base.entry(idx[a]).value - tf.base.entry(idx[b]).value) < eps)
        return true;
  return false;
}

std::vector<std::size_t> first_indices(int n) {
  std::vector<std::size_t> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
  return v;
}

}  // namespace

TauFunction make_tau(const slavnov::CasoratianSpec& spec, MiwaMultiset base) {
  return TauFunction{spec.c, std::move(base)};
}

Complex tau(const TauFunction& tf) {
  const std::vector<Complex> h = h_table(tf.base, tf.width());
  const int n = tf.n();
  DenseMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m(i - 1, j - 1) = omega_from_h(tf, i, j, h);
  return determinant(m);
}

Complex tau_shift(const TauFunction& tf, const ShiftList& s) {
  for (std::size_t a = 0; a < s.indices.size(); ++a)
    for (std::size_t b = a + 1; b < s.indices.size(); ++b)
      if (s.indices[a] == s.indices[b])
        throw std::invalid_argument("tau_shift: repeated shift index");
  TauFunction shifted{tf.c, tf.base.with_shift(s.indices)};
  return tau(shifted);
}

Complex omega_entry(const TauFunction& tf, int i, int j, const MiwaMultiset& at) {
  if (i < 1 || i > tf.n()) throw ArityError("omega_entry: row out of range");
  if (j < 1) throw ArityError("omega_entry: column must be >= 1");
  return omega_from_h(tf, i, j, h_table(at, tf.width()));
}

std::vector<Complex> omega_column(const TauFunction& tf, int j, const MiwaMultiset& at) {
  const std::vector<Complex> h = h_table(at, tf.width());
  std::vector<Complex> col(static_cast<std::size_t>(tf.n()));
  for (int i = 1; i <= tf.n(); ++i)
    col[static_cast<std::size_t>(i) - 1] = omega_from_h(tf, i, j, h);
  return col;
}

IdentityResidual identity_A1_residual(const TauFunction& tf, int n, std::size_t var) {
  const int rank = tf.n();
  if (n < 2 || n > rank) throw ArityError("identity_A1_residual: need 2 <= n <= N");
  if (var >= tf.base.size())
    throw MissingVariableError("identity_A1_residual: no such variable");
  const Complex xv = tf.base.entry(var).value;
  const MiwaMultiset shifted = tf.base.with_one_added(var);

  const Complex lhs = std::pow(xv, n - 2) * tau(TauFunction{tf.c, shifted});
  std::vector<ColumnSpec> cols;
  cols.reserve(static_cast<std::size_t>(rank));
  for (int j = 1; j <= rank - 1; ++j) cols.push_back({j, &tf.base});
  cols.push_back({rank - n + 2, &shifted});
  const Complex rhs = det_of_columns(tf, cols);
  return {residual_pair(lhs, rhs, kFloor), false};
}

IdentityResidual identity_A2_residual(const TauFunction& tf, int n) {
  const int rank = tf.n();
  if (n < 2 || n > rank) throw ArityError("identity_A2_residual: need 2 <= n <= N");
  if (tf.base.size() < static_cast<std::size_t>(n))
    throw MissingVariableError("identity_A2_residual: base has fewer than n variables");
  const std::vector<std::size_t> idx = first_indices(n);
  if (values_coincide(tf, idx)) return {0.0, true};  // both sides vanish

  Complex pref = 1.0;
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s)
      pref *= tf.base.entry(static_cast<std::size_t>(r)).value -
              tf.base.entry(static_cast<std::size_t>(s)).value;
  const Complex lhs = pref * tau(TauFunction{tf.c, tf.base.with_shift(idx)});

  std::vector<MiwaMultiset> shifted;
  shifted.reserve(static_cast<std::size_t>(n));
  for (int k = n; k >= 1; --k)
    shifted.push_back(tf.base.with_one_added(static_cast<std::size_t>(k - 1)));
  std::vector<ColumnSpec> cols;
  cols.reserve(static_cast<std::size_t>(rank));
  for (int j = 1; j <= rank - n; ++j) cols.push_back({j, &tf.base});
  for (const auto& ms : shifted) cols.push_back({rank - n + 1, &ms});
  const Complex rhs = det_of_columns(tf, cols);
  return {residual_pair(lhs, rhs, kFloor), false};
}

std::array<Complex, 3> hirota_miwa_terms(const TauFunction& tf,
                                         std::array<std::size_t, 3> triple) {
  const auto [i, j, k] = triple;
  const Complex xi = tf.base.entry(i).value;
  const Complex xj = tf.base.entry(j).value;
  const Complex xk = tf.base.entry(k).value;
  auto t = [&](std::initializer_list<std::size_t> up) {
    std::vector<std::size_t> v(up);
    return tau(TauFunction{tf.c, tf.base.with_shift(v)});
  };
  return {xi * (xj - xk) * t({i}) * t({j, k}),
          xj * (xk - xi) * t({j}) * t({i, k}),
          xk * (xi - xj) * t({k}) * t({i, j})};
}

IdentityResidual hirota_miwa_residual(const TauFunction& tf,
                                      std::array<std::size_t, 3> triple) {
  if (triple[0] == triple[1] || triple[0] == triple[2] || triple[1] == triple[2])
    throw MissingVariableError("hirota_miwa_residual: indices must be distinct");
  const std::array<Complex, 3> terms = hirota_miwa_terms(tf, triple);
  const std::vector<std::size_t> idx(triple.begin(), triple.end());
  if (values_coincide(tf, idx)) return {residual_of_terms(terms, kFloor), true};
  return {residual_of_terms(terms, kFloor), false};
}

std::array<Complex, 3> bilinear_expansion_terms(const TauFunction& tf,
                                                std::array<std::size_t, 3> triple,
                                                ShiftScope scope) {
  // Cofactor expansion of the 3x3 determinant along its last column. With the
  // rows taken cyclically the sign and the 2x2 Vandermonde minor collapse to
  // the single factor (x_b - x_a) per term.
  std::array<Complex, 3> terms;
  for (int r = 0; r < 3; ++r) {
    const std::size_t vi = triple[static_cast<std::size_t>(r)];
    const std::size_t va = triple[static_cast<std::size_t>((r + 1) % 3)];
    const std::size_t vb = triple[static_cast<std::size_t>((r + 2) % 3)];
    std::vector<std::size_t> minus;
    if (scope == ShiftScope::chosen_subset) {
      minus = {va, vb};
    } else {
      for (std::size_t m = 0; m < tf.base.size(); ++m)
        if (m != vi) minus.push_back(m);
    }
    const Complex tp = tau(TauFunction{tf.c, tf.base.with_one_added(vi)});
    const Complex tm = tau(TauFunction{tf.c, tf.base.with_shift(minus)});
    const Complex xa = tf.base.entry(va).value;
    const Complex xb = tf.base.entry(vb).value;
    terms[static_cast<std::size_t>(r)] = tf.base.entry(vi).value * tp * tm * (xb - xa);
  }
  return terms;
}

IdentityResidual bilinear_det_residual(const TauFunction& tf,
                                       std::span<const std::size_t> vars,
                                       ShiftScope scope) {
  const int n = static_cast<int>(vars.size());
  if (n < 3 || n > tf.n()) throw ArityError("bilinear_det_residual: need 3 <= n <= N");
  for (std::size_t a = 0; a < vars.size(); ++a)
    for (std::size_t b = a + 1; b < vars.size(); ++b)
      if (vars[a] == vars[b])
        throw MissingVariableError("bilinear_det_residual: repeated variable index");

  DenseMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    const std::size_t vi = vars[static_cast<std::size_t>(r)];
    const Complex x = tf.base.entry(vi).value;
    Complex pw = 1.0;
    for (int cidx = 0; cidx < n - 1; ++cidx) {
      m(r, cidx) = pw;
      pw *= x;
    }
    std::vector<std::size_t> minus;
    if (scope == ShiftScope::chosen_subset) {
      for (std::size_t v : vars)
        if (v != vi) minus.push_back(v);
    } else {
      for (std::size_t v = 0; v < tf.base.size(); ++v)
        if (v != vi) minus.push_back(v);
    }
    const Complex tp = tau(TauFunction{tf.c, tf.base.with_one_added(vi)});
    const Complex tm = tau(TauFunction{tf.c, tf.base.with_shift(minus)});
    m(r, n - 1) = std::pow(x, n - 2) * tp * tm;
  }
  const Complex det = determinant(m);
  // normalize by the cofactor-expansion term mass along the last column
  double mass = 0.0;
  for (int r = 0; r < n; ++r) {
    DenseMatrix minor(static_cast<std::size_t>(n) - 1, static_cast<std::size_t>(n) - 1);
    for (int rr = 0, ri = 0; rr < n; ++rr) {
      if (rr == r) continue;
      for (int cc = 0; cc < n - 1; ++cc) minor(ri, cc) = m(rr, cc);
      ++ri;
    }
    mass += std::abs(m(r, n - 1)) * std::abs(determinant(minor));
  }
  const std::vector<std::size_t> idx(vars.begin(), vars.end());
  const bool degen = values_coincide(tf, idx);
  return {std::abs(det) / std::max(mass, kFloor), degen};
}

IdentityResidual laplace_identity_residual(const TauFunction& tf, int n) {
  const int rank = tf.n();
  if (n < 3 || n > rank) throw ArityError("laplace_identity_residual: need 3 <= n <= N");
  if (tf.base.size() < static_cast<std::size_t>(n))
    throw MissingVariableError("laplace_identity_residual: base has fewer than n variables");
  const std::vector<std::size_t> idx = first_indices(n);
  if (values_coincide(tf, idx)) return {0.0, true};  // degenerates to 0 = 0

  std::vector<Complex> terms;
  terms.reserve(static_cast<std::size_t>(n));
  for (int nu = 1; nu <= n; ++nu) {
    Complex pref = (nu % 2 == 1) ? 1.0 : -1.0;
    const Complex xnu = tf.base.entry(static_cast<std::size_t>(nu) - 1).value;
    pref *= std::pow(xnu, n - 2);
    pref *= tau(TauFunction{tf.c, tf.base.with_one_added(static_cast<std::size_t>(nu) - 1)});
    Complex vdm = 1.0;
    std::vector<std::size_t> others;
    for (int r = 1; r <= n; ++r)
      if (r != nu) others.push_back(static_cast<std::size_t>(r) - 1);
    for (std::size_t a = 0; a < others.size(); ++a)
      for (std::size_t b = a + 1; b < others.size(); ++b)
        vdm *= tf.base.entry(others[a]).value - tf.base.entry(others[b]).value;
    pref *= vdm * tau(TauFunction{tf.c, tf.base.with_shift(others)});
    terms.push_back(pref);
  }
  return {residual_of_terms(terms, kFloor), false};
}

double two_n_determinant_residual(const TauFunction& tf, int n) {
  const int rank = tf.n();
  if (n < 3 || n > rank) throw ArityError("two_n_determinant_residual: need 3 <= n <= N");
  if (tf.base.size() < static_cast<std::size_t>(n))
    throw MissingVariableError("two_n_determinant_residual: base has fewer than n variables");

  const std::size_t dim = 2 * static_cast<std::size_t>(rank);
  DenseMatrix m(dim, dim);
  std::size_t col = 0;
  auto put = [&](const std::vector<Complex>& top, const std::vector<Complex>& bottom) {
    for (int i = 0; i < rank; ++i) {
      m(static_cast<std::size_t>(i), col) = top.empty() ? Complex(0.0)
                                                        : top[static_cast<std::size_t>(i)];
      m(static_cast<std::size_t>(rank + i), col) =
          bottom.empty() ? Complex(0.0) : bottom[static_cast<std::size_t>(i)];
    }
    ++col;
  };
  const std::vector<Complex> none;
  for (int j = 1; j <= rank - 1; ++j) put(omega_column(tf, j, tf.base), none);
  {
    const std::vector<Complex> shared =
        omega_column(tf, rank - n + 2, tf.base.with_one_added(0));
    put(shared, shared);
  }
  for (int j = 1; j <= rank - n + 1; ++j) put(none, omega_column(tf, j, tf.base));
  for (int k = n; k >= 2; --k) {
    const std::vector<Complex> shared =
        omega_column(tf, rank - n + 2, tf.base.with_one_added(static_cast<std::size_t>(k - 1)));
    put(shared, shared);
  }
  return std::abs(determinant(m)) / std::max(permanent_abs(m), kFloor);
}

}  // namespace taubethe::dkp
