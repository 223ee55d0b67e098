#ifndef TAUBETHE_CORE_MATRIX_HPP
#define TAUBETHE_CORE_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "taubethe/core/types.hpp"

namespace taubethe {

// Row-major dense complex matrix. Everything downstream stays small
// (operators up to 2^L with L <= 12, identity checks at most 2N x 2N),
// so no blocking, no sparsity.
class DenseMatrix {
 public:
  DenseMatrix() : rows_(0), cols_(0) {}
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Complex(0.0)) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Complex operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  const std::vector<Complex>& data() const { return a_; }
  std::vector<Complex>& data() { return a_; }

 private:
  std::size_t rows_, cols_;
  std::vector<Complex> a_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);

std::vector<Complex> matvec(const DenseMatrix& m, std::span<const Complex> v);

// Kronecker product, left factor on the most significant index block.
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

double frobenius_norm(const DenseMatrix& m);

// Determinant by row-pivoted Gaussian elimination. Throws DimensionError on
// non-square input. Deterministic for fixed input.
Complex determinant(const DenseMatrix& m);

// Permanent of |m_ij| by Ryser's formula; used to normalize determinants that
// are expected to cancel to zero. Intended for n <= ~12.
double permanent_abs(const DenseMatrix& m);

// Singular values of a small matrix via cyclic Jacobi on m m^H (descending).
std::vector<double> singular_values(const DenseMatrix& m);

}  // namespace taubethe

#endif
