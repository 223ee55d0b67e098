#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "taubethe/core/sampling.hpp"
#include "taubethe/symfun/symfun.hpp"

using namespace taubethe;
using namespace taubethe::symfun;

namespace {

MiwaMultiset random_multiset(Rng& rng, std::size_t n, int max_mult = 2) {
  SampleConfig sc;
  const auto vals = sample_points(sc, n, {}, rng);
  std::vector<MiwaEntry> es;
  for (Complex v : vals)
    es.push_back({v, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_mult)))});
  return MiwaMultiset(std::move(es));
}

}  // namespace

TEST_CASE("elementary symmetric functions") {
  Rng rng(3);
  SampleConfig sc;
  const auto v = sample_points(sc, 3, {}, rng);
  const MiwaMultiset x = MiwaMultiset::distinct(v);
  CHECK(residual_pair(elem_sym(x, 1), v[0] + v[1] + v[2]) < 1e-14);
  CHECK(elem_sym(x, 0) == Complex(1.0));
  CHECK(elem_sym(x, -2) == Complex(0.0));

  const MiwaMultiset two = MiwaMultiset::distinct(std::vector<Complex>{2.0, 3.0});
  CHECK(elem_sym(two, 3) == Complex(0.0));  // above the variable count
  CHECK(residual_pair(elem_sym(two, 2), Complex(6.0)) < 1e-15);
}

TEST_CASE("complete symmetric functions") {
  const Complex x1(1.3, 0.4), x2(-0.5, 0.9);
  const MiwaMultiset x = MiwaMultiset::distinct(std::vector<Complex>{x1, x2});
  CHECK(residual_pair(complete_sym(x, 2), x1 * x1 + x1 * x2 + x2 * x2) < 1e-14);
  CHECK(complete_sym(x, 0) == Complex(1.0));
  CHECK(complete_sym(x, -1) == Complex(0.0));

  const MiwaMultiset dbl(std::vector<MiwaEntry>{{x1, 2}});
  CHECK(residual_pair(complete_sym(dbl, 2), 3.0 * x1 * x1) < 1e-14);
}

TEST_CASE("h identities i1-i3 on random multisets") {
  Rng rng(17);
  for (int trial = 0; trial < 6; ++trial) {
    const MiwaMultiset x = random_multiset(rng, 2 + rng.below(3));
    const std::size_t m = rng.below(x.size());
    const Complex xm = x.entry(m).value;
    for (int i = 0; i <= 6; ++i) {
      CHECK(residual_pair(complete_sym(x, i),
                          complete_sym(x.with_one_removed(m), i) +
                              xm * complete_sym(x, i - 1)) < 1e-12);
      const MiwaMultiset d0 = x.with_one_added(0);
      CHECK(residual_pair(complete_sym(x, i),
                          complete_sym(d0, i) - x.entry(0).value * complete_sym(d0, i - 1)) <
            1e-12);
      if (x.size() >= 2) {
        const Complex x1 = x.entry(0).value, x2 = x.entry(1).value;
        const MiwaMultiset both = x.with_one_added(0).with_one_added(1);
        CHECK(residual_pair((x2 - x1) * complete_sym(both, i),
                            x2 * complete_sym(x.with_one_added(1), i) -
                                x1 * complete_sym(x.with_one_added(0), i)) < 1e-12);
      }
    }
  }
}

TEST_CASE("discrete derivative drops the degree") {
  const MiwaMultiset x = MiwaMultiset::distinct(std::vector<Complex>{{2.0, 0.0}, {3.0, 0.0}});
  const auto dd = discrete_derivative(x, 0, complete_sym);
  CHECK(residual_pair(dd(2), Complex(5.0)) < 1e-14);  // (19 - 9) / 2 = h_1{2,3}
  CHECK(residual_pair(dd(2), complete_sym(x, 1)) < 1e-14);
  CHECK(dd(0) == Complex(0.0));  // h_0 is constant

  Rng rng(23);
  const MiwaMultiset y = random_multiset(rng, 3);
  const auto ddy = discrete_derivative(y, 1, complete_sym);
  for (int i = 0; i <= 5; ++i)
    CHECK(residual_pair(ddy(i), complete_sym(y, i - 1)) < 1e-12);

  const MiwaMultiset zero(std::vector<MiwaEntry>{{Complex(0.0), 1}, {Complex(1.0), 1}});
  CHECK_THROWS_AS(discrete_derivative(zero, 0, complete_sym), DivisionByZeroError);
  const MiwaMultiset empty_mult(std::vector<MiwaEntry>{{Complex(1.0), 0}});
  CHECK_THROWS_AS(discrete_derivative(empty_mult, 0, complete_sym), MissingVariableError);
}

TEST_CASE("schur polynomials, both routes") {
  CHECK(residual_pair(schur_bialternant(Partition{}, MiwaMultiset::distinct(std::vector<Complex>{
                                            {1.5, 0.2}, {0.7, -0.1}})),
                      Complex(1.0)) < 1e-14);
  const Complex x1(1.1, 0.6), x2(0.4, -0.8);
  const MiwaMultiset x = MiwaMultiset::distinct(std::vector<Complex>{x1, x2});
  CHECK(residual_pair(schur_bialternant(Partition{1, 1}, x), x1 * x2) < 1e-13);

  const MiwaMultiset y =
      MiwaMultiset::distinct(std::vector<Complex>{{2, 0}, {3, 0}, {5, 0}});
  CHECK(residual_pair(schur_bialternant(Partition{2, 1}, y),
                      schur_jacobi_trudi(Partition{2, 1}, y)) < 1e-13);
  CHECK(residual_pair(schur_jacobi_trudi(Partition{1}, y), Complex(10.0)) < 1e-14);

  const MiwaMultiset coincident =
      MiwaMultiset::distinct(std::vector<Complex>{{2, 0}, {2, 0}});
  CHECK_THROWS_AS(schur_bialternant(Partition{1}, coincident), VandermondeSingularError);

  // more rows than variables (counted with multiplicity) kills the polynomial
  const MiwaMultiset small(std::vector<MiwaEntry>{{Complex(1.2, 0.3), 2}});
  const Complex v = schur_jacobi_trudi(Partition{1, 1, 1}, small);
  CHECK(std::abs(v) < 1e-10);
}

TEST_CASE("jacobi-trudi window independence") {
  Rng rng(31);
  const MiwaMultiset x = random_multiset(rng, 3);
  for (const auto& lam : {Partition{3, 1}, Partition{2, 2, 1}, Partition{}}) {
    const Complex a = schur_jacobi_trudi(lam, x);
    const Complex b =
        schur_jacobi_trudi(lam, x, static_cast<int>(lam.length()) + 2);
    CHECK(residual_pair(a, b) < 1e-12);
  }
}

TEST_CASE("one-row character polynomials") {
  TimesVector t{{Complex(0.3, 0.1), Complex(-0.8, 0.4), Complex(0.2, -0.6)}};
  const Complex t1 = t.at(1), t2 = t.at(2);
  CHECK(residual_pair(char_one_row(t, 2), t1 * t1 / 2.0 + t2) < 1e-14);
  CHECK(char_one_row(t, -3) == Complex(0.0));
  CHECK(char_one_row(t, 0) == Complex(1.0));

  TimesVector ones{{Complex(1.0), Complex(1.0), Complex(1.0)}};
  CHECK(residual_pair(char_one_row(ones, 3), Complex(13.0 / 6.0)) < 1e-14);

  CHECK_THROWS_AS(char_one_row(t, 4), ArityError);
}

TEST_CASE("character polynomials for diagrams") {
  TimesVector t{{Complex(0.7, -0.3), Complex(0.2, 0.5), Complex(-0.4, 0.1),
                 Complex(0.9, 0.2)}};
  const Complex t1 = t.at(1), t2 = t.at(2), t3 = t.at(3);
  CHECK(residual_pair(char_poly(Partition{1, 1}, t), t1 * t1 / 2.0 - t2) < 1e-13);
  CHECK(residual_pair(char_poly(Partition{2, 2}, t),
                      t1 * t1 * t1 * t1 / 12.0 - t1 * t3 + t2 * t2) < 1e-13);
  CHECK(char_poly(Partition{}, t) == Complex(1.0));
}

TEST_CASE("miwa change of variables") {
  const Complex v(0.8, 0.45);
  const MiwaMultiset single(std::vector<MiwaEntry>{{v, 1}});
  for (int j = 1; j <= 4; ++j)
    CHECK(residual_pair(miwa_map(single, j), std::pow(v, j) / static_cast<double>(j)) <
          1e-14);

  const MiwaMultiset rep(std::vector<MiwaEntry>{{Complex(3.0), 2}});
  CHECK(residual_pair(miwa_map(rep, 2), Complex(9.0)) < 1e-15);

  Rng rng(41);
  const MiwaMultiset x = random_multiset(rng, 2, 1);
  const TimesVector t = miwa_times(x, 6);
  for (int i = 0; i <= 5; ++i)
    CHECK(residual_pair(char_one_row(t, i), complete_sym(x, i)) < 1e-12);
}

TEST_CASE("character polynomials meet schur under miwa substitution") {
  Rng rng(43);
  const MiwaMultiset x = random_multiset(rng, 3, 1);
  for (const auto& lam : partitions_in_box(3, 4)) {
    const TimesVector t = miwa_times(x, std::max(lam.size(), 1));
    CHECK(residual_pair(char_poly(lam, t), schur_jacobi_trudi(lam, x)) < 1e-11);
  }
}

TEST_CASE("vandermonde products") {
  CHECK(vandermonde(std::vector<Complex>{Complex(4.2, 1.0)}) == Complex(1.0));
  CHECK(vandermonde(std::vector<Complex>{Complex(2.0), Complex(3.0)}) == Complex(-1.0));
  const Complex lam(0.4, 0.2);
  CHECK(std::abs(vandermonde_trig(std::vector<Complex>{lam, lam})) == 0.0);
  const std::vector<Complex> three = {Complex(0.3), Complex(0.9, 0.1), Complex(-0.4, 0.7)};
  CHECK(residual_pair(vandermonde_trig(three),
                      bracket(three[0] - three[1]) * bracket(three[0] - three[2]) *
                          bracket(three[1] - three[2])) < 1e-14);
}

TEST_CASE("symmetry under entry permutation") {
  Rng rng(47);
  const MiwaMultiset x = random_multiset(rng, 3);
  std::vector<MiwaEntry> perm(x.entries());
  std::rotate(perm.begin(), perm.begin() + 1, perm.end());
  const MiwaMultiset y{std::vector<MiwaEntry>(perm)};
  for (int i = 0; i <= 5; ++i) {
    CHECK(residual_pair(complete_sym(x, i), complete_sym(y, i)) < 1e-13);
    CHECK(residual_pair(elem_sym(x, i), elem_sym(y, i)) < 1e-13);
  }
  CHECK(residual_pair(schur_jacobi_trudi(Partition{2, 1}, x),
                      schur_jacobi_trudi(Partition{2, 1}, y)) < 1e-13);
}

TEST_CASE("partition normalization and box enumeration") {
  CHECK(Partition{2, 1, 0, 0} == Partition{2, 1});
  CHECK(Partition{}.length() == 0);
  CHECK(Partition{3, 3, 1}.size() == 7);
  CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), std::invalid_argument);

  CHECK(partitions_in_box(2, 2).size() == 6);
  CHECK(partitions_in_box(3, 4).size() == 35);
  CHECK(partitions_in_box(4, 6).size() == 210);
}

TEST_CASE("multiset plumbing") {
  MiwaMultiset x(std::vector<MiwaEntry>{{Complex(1.0), 2}, {Complex(2.0), 0}});
  CHECK(x.total() == 2);
  CHECK(x.with_one_added(1).total() == 3);
  CHECK_THROWS_AS(x.with_one_removed(1), MissingVariableError);
  CHECK_THROWS_AS(MiwaMultiset(std::vector<MiwaEntry>{{Complex(1.0), -1}}),
                  std::invalid_argument);
  CHECK(x.separated(0.5));
  MiwaMultiset close(std::vector<MiwaEntry>{{Complex(1.0), 1}, {Complex(1.001), 1}});
  CHECK_FALSE(close.separated(0.05));
}
