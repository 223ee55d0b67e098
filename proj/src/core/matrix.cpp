#include "taubethe/core/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace taubethe {

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner sizes differ");
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix sum: shapes differ");
  DenseMatrix out = a;
  for (std::size_t i = 0; i < out.data().size(); ++i) out.data()[i] += b.data()[i];
  return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix difference: shapes differ");
  DenseMatrix out = a;
  for (std::size_t i = 0; i < out.data().size(); ++i) out.data()[i] -= b.data()[i];
  return out;
}

std::vector<Complex> matvec(const DenseMatrix& m, std::span<const Complex> v) {
  if (m.cols() != v.size()) throw DimensionError("matvec: size mismatch");
  std::vector<Complex> out(m.rows(), Complex(0.0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

double frobenius_norm(const DenseMatrix& m) {
  double s = 0.0;
  for (const Complex& z : m.data()) s += std::norm(z);
  return std::sqrt(s);
}

Complex determinant(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1.0;
  DenseMatrix a = m;
  Complex det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = std::abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(a(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    const Complex p = a(col, col);
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = a(r, col) / p;
      if (f == Complex(0.0)) continue;
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

double permanent_abs(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("permanent_abs: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1.0;
  if (n > 20) throw DimensionError("permanent_abs: matrix too large for Ryser");
  // Ryser: perm(A) = (-1)^n sum_{S != empty} (-1)^|S| prod_i sum_{j in S} a_ij
  double total = 0.0;
  const std::size_t full = (std::size_t{1} << n);
  std::vector<double> rowsum(n);
  for (std::size_t s = 1; s < full; ++s) {
    std::fill(rowsum.begin(), rowsum.end(), 0.0);
    int bits = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (s & (std::size_t{1} << j)) {
        ++bits;
        for (std::size_t i = 0; i < n; ++i) rowsum[i] += std::abs(m(i, j));
      }
    }
    double prod = 1.0;
    for (std::size_t i = 0; i < n; ++i) prod *= rowsum[i];
    total += ((n - bits) % 2 == 0) ? prod : -prod;
  }
  return std::abs(total);
}

std::vector<double> singular_values(const DenseMatrix& m) {
  // Hermitian Jacobi on G = m m^H (size rows x rows); fine for the small
  // coefficient matrices this is used on.
  const std::size_t n = m.rows();
  DenseMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < m.cols(); ++k) s += m(i, k) * std::conj(m(j, k));
      g(i, j) = s;
    }
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(g(p, q));
    if (off < 1e-30 * std::max(1.0, std::norm(frobenius_norm(g)))) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex gpq = g(p, q);
        if (std::abs(gpq) == 0.0) continue;
        const double app = g(p, p).real();
        const double aqq = g(q, q).real();
        const double absg = std::abs(gpq);
        const Complex phase = gpq / absg;
        const double theta = 0.5 * std::atan2(2.0 * absg, app - aqq);
        const double c = std::cos(theta);
        const Complex s = std::sin(theta) * phase;
        // rotate rows/cols p,q
        for (std::size_t k = 0; k < n; ++k) {
          const Complex gpk = g(p, k), gqk = g(q, k);
          g(p, k) = c * gpk + std::conj(s) * gqk;
          g(q, k) = -s * gpk + c * gqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex gkp = g(k, p), gkq = g(k, q);
          g(k, p) = c * gkp + s * gkq;
          g(k, q) = -std::conj(s) * gkp + c * gkq;
        }
      }
    }
  }
  std::vector<double> sv(n);
  for (std::size_t i = 0; i < n; ++i) sv[i] = std::sqrt(std::max(0.0, g(i, i).real()));
  std::sort(sv.rbegin(), sv.rend());
  return sv;
}

}  // namespace taubethe
