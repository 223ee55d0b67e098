#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "taubethe/core/matrix.hpp"
#include "taubethe/core/sampling.hpp"
#include "taubethe/core/types.hpp"

using namespace taubethe;

namespace {

DenseMatrix random_matrix(Rng& rng, std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double re = rng.uniform(-1.0, 1.0);
      const double im = rng.uniform(-1.0, 1.0);
      m(i, j) = Complex(re, im);
    }
  return m;
}

}  // namespace

TEST_CASE("determinant base cases") {
  DenseMatrix one(1, 1);
  one(0, 0) = Complex(2.5, -1.0);
  CHECK(determinant(one) == Complex(2.5, -1.0));

  CHECK(determinant(DenseMatrix::identity(3)) == Complex(1.0));

  DenseMatrix dup(3, 3);
  Rng rng(5);
  for (std::size_t j = 0; j < 3; ++j) {
    dup(0, j) = Complex(rng.uniform(), rng.uniform());
    dup(1, j) = Complex(rng.uniform(), rng.uniform());
    dup(2, j) = dup(0, j);
  }
  CHECK(std::abs(determinant(dup)) <= 1e-8 * permanent_abs(dup));

  CHECK_THROWS_AS(determinant(DenseMatrix(2, 3)), DimensionError);
  CHECK(determinant(DenseMatrix(0, 0)) == Complex(1.0));
}

TEST_CASE("determinant is alternating and multiplicative") {
  Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    DenseMatrix a = random_matrix(rng, 4);
    DenseMatrix swapped = a;
    for (std::size_t j = 0; j < 4; ++j) std::swap(swapped(1, j), swapped(3, j));
    CHECK(residual_pair(determinant(swapped), -determinant(a)) < 1e-12);

    DenseMatrix b = random_matrix(rng, 4);
    CHECK(residual_pair(determinant(a * b), determinant(a) * determinant(b)) < 1e-12);
  }
}

TEST_CASE("permanent of small absolute matrices") {
  DenseMatrix m(2, 2);
  m(0, 0) = Complex(1, 1);
  m(0, 1) = Complex(0, 2);
  m(1, 0) = Complex(-3, 0);
  m(1, 1) = Complex(0, -1);
  const double expect = std::sqrt(2.0) * 1.0 + 2.0 * 3.0;
  CHECK(permanent_abs(m) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(permanent_abs(DenseMatrix(0, 0)) == doctest::Approx(1.0));
}

TEST_CASE("singular values of a diagonal matrix") {
  DenseMatrix m(3, 3);
  m(0, 0) = Complex(0.0, -3.0);
  m(1, 1) = Complex(1.0, 0.0);
  m(2, 2) = Complex(0.0, 0.5);
  const auto sv = singular_values(m);
  REQUIRE(sv.size() == 3);
  CHECK(sv[0] == doctest::Approx(3.0));
  CHECK(sv[1] == doctest::Approx(1.0));
  CHECK(sv[2] == doctest::Approx(0.5));
}

TEST_CASE("approx_equal band") {
  Tolerance tol;
  CHECK(approx_equal(Complex(1.3, -0.2), Complex(1.3, -0.2), tol));
  CHECK_FALSE(approx_equal(Complex(1.0), Complex(1.0 + 2.0 * tol.rel), tol, 1.0));
  CHECK(approx_equal(Complex(0.0), Complex(tol.abs_floor * tol.rel / 2.0), tol));
  CHECK_THROWS_AS(approx_equal(Complex(1.0), Complex(1.0), tol, -1.0),
                  std::invalid_argument);
}

TEST_CASE("tolerance validation") {
  Tolerance bad;
  bad.rel = 1.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.rel = 1e-8;
  bad.abs_floor = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("residual of cancelling terms") {
  const Complex terms[3] = {Complex(1.0), Complex(-0.5), Complex(-0.5)};
  CHECK(residual_of_terms(terms) == doctest::Approx(0.0));
  const Complex off[2] = {Complex(1.0), Complex(-0.9)};
  CHECK(residual_of_terms(off) == doctest::Approx(0.1 / 1.9));
}

TEST_CASE("sample_points honors its postconditions") {
  SampleConfig cfg;
  cfg.seed = 99;

  const auto single = sample_points(cfg, 1);
  REQUIRE(single.size() == 1);
  CHECK(std::abs(single[0]) >= cfg.modulus_lo);
  CHECK(std::abs(single[0]) <= cfg.modulus_hi);

  const auto a = sample_points(cfg, 3);
  const auto b = sample_points(cfg, 3);
  CHECK(a == b);  // deterministic in the seed

  const std::vector<Complex> forbidden = {a[0]};
  const auto c = sample_points(cfg, 2, forbidden);
  for (Complex z : c) {
    CHECK(std::abs(z - a[0]) >= cfg.min_separation);
    CHECK(std::abs(z) >= cfg.modulus_lo);
    CHECK(std::abs(z) <= cfg.modulus_hi);
  }
  CHECK(std::abs(c[0] - c[1]) >= cfg.min_separation);
}

TEST_CASE("sample_points gives up on impossible requests") {
  SampleConfig cfg;
  cfg.modulus_lo = 1.0;
  cfg.modulus_hi = 1.0001;
  cfg.min_separation = 2.5;  // no room for three points this far apart on the ring
  CHECK_THROWS_AS(sample_points(cfg, 3), SamplingError);
}

TEST_CASE("bracket basics") {
  CHECK(std::abs(bracket(Complex(0.0))) == 0.0);
  const Complex u(0.3, -0.7);
  CHECK(residual_pair(bracket(u), -bracket(-u)) < 1e-15);
  CHECK(residual_pair(bracket(u), 2.0 * std::sinh(u)) < 1e-15);
}
