#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bibool/convolutions.hpp"
#include "bibool/positivity.hpp"
#include "bibool/random_gen.hpp"
#include "test_util.hpp"

using namespace bibool;

namespace {

AtomicMeasure2D cross_measure() {
  AtomicMeasure2D mu;
  mu.atoms = {{1, 0, Rational(1, 2)}, {0, 1, Rational(1, 2)}};
  return mu;
}

using Mat = std::vector<std::vector<Rational>>;

Mat mat_mul(const Mat& a, const Mat& b) {
  size_t n = a.size();
  Mat c(n, std::vector<Rational>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Mat transpose(const Mat& a) {
  size_t n = a.size();
  Mat t(n, std::vector<Rational>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) t[j][i] = a[i][j];
  return t;
}

}  // namespace

TEST_CASE("order-zero moment matrix") {
  RandomGen gen(501);
  ExponentTable mom = gen.table(TableKind::moments, 4);
  MomentMatrix x0 = moment_matrix(mom, 0);
  CHECK(x0.dim() == 1);
  CHECK(x0.rows[0][0] == 1);
  CHECK(determinant(x0) == 1);
  Inertia in = inertia(x0);
  CHECK(in.n_plus == 1);
  CHECK(in.is_psd());
}

TEST_CASE("the convolved cross measure's order-one moment matrix") {
  ExponentTable mom = measure_moments(cross_measure(), 4);
  ExponentTable s = additive_convolve(mom, mom, ConvolutionKind::biboolean);
  MomentMatrix x1 = moment_matrix(s, 1);
  Mat expect = {{1, 1, 1, Rational(1, 2)},
                {1, Rational(3, 2), Rational(1, 2), Rational(3, 4)},
                {1, Rational(1, 2), Rational(3, 2), Rational(3, 4)},
                {Rational(1, 2), Rational(3, 4), Rational(3, 4), Rational(9, 8)}};
  CHECK(x1.rows == expect);
  CHECK(x1.index == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(determinant(x1) == Rational(-1, 8));
  CHECK_FALSE(inertia(x1).is_psd());
}

TEST_CASE("order-one matrix of the signed three-atom cumulant distribution") {
  AtomicMeasure2D tau;
  tau.atoms = {{1, 1, 3}, {-1, 1, 3}, {1, -1, 3}};
  ExponentTable taum = measure_moments(tau, 4);
  ExponentTable b(TableKind::biboolean_cum, 4);
  for (const auto& [mn, v] : taum.entries) b.set(mn.first, mn.second, v);
  MomentMatrix x1 = moment_matrix(cumulants_to_moments(b), 1);
  Mat expect = {{1, 3, 3, 6},
                {3, 18, 6, 48},
                {3, 6, 18, 48},
                {6, 48, 48, 324}};
  CHECK(x1.rows == expect);
  CHECK(determinant(x1) == Rational(-864));
  CHECK_FALSE(inertia(x1).is_psd());
}

TEST_CASE("determinant basics and permutation invariance") {
  CHECK(determinant(Mat{{1, 0}, {0, 1}}) == 1);
  CHECK(determinant(Mat{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(Mat{{2, 1}, {1, 2}}) == 3);
  RandomGen gen(502);
  for (int trial = 0; trial < 10; ++trial) {
    Mat a(4, std::vector<Rational>(4));
    for (auto& row : a)
      for (auto& v : row) v = gen.grid_rational();
    Rational d = determinant(a);
    // simultaneous row/column permutation preserves the determinant
    std::vector<int> perm{2, 0, 3, 1};
    Mat p(4, std::vector<Rational>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) p[i][j] = a[perm[i]][perm[j]];
    CHECK(determinant(p) == d);
  }
}

TEST_CASE("inertia of small explicit matrices") {
  Inertia one = inertia(Mat{{1}});
  CHECK(one.n_plus == 1);
  CHECK(one.n_zero == 0);
  CHECK(one.n_minus == 0);

  Inertia d = inertia(Mat{{1, 0, 0}, {0, 0, 0}, {0, 0, -2}});
  CHECK(d.n_plus == 1);
  CHECK(d.n_zero == 1);
  CHECK(d.n_minus == 1);

  // zero diagonal forces the symmetrizing pivot path
  Inertia h = inertia(Mat{{0, 1}, {1, 0}});
  CHECK(h.n_plus == 1);
  CHECK(h.n_minus == 1);
}

TEST_CASE("inertia is a congruence invariant") {
  RandomGen gen(503);
  std::uniform_int_distribution<int> smallint(-2, 2), pick(0, 3);
  for (int trial = 0; trial < 10; ++trial) {
    Mat a(4, std::vector<Rational>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j <= i; ++j) a[i][j] = a[j][i] = gen.grid_rational();
    Inertia base = inertia(a);
    CHECK(base.n_plus + base.n_zero + base.n_minus == 4);

    // random unimodular U from integer elementary operations
    Mat u(4, std::vector<Rational>(4, 0));
    for (int i = 0; i < 4; ++i) u[i][i] = 1;
    for (int step = 0; step < 6; ++step) {
      int i = pick(gen.rng), j = pick(gen.rng);
      if (i == j) continue;
      int k = smallint(gen.rng);
      for (int c = 0; c < 4; ++c) u[i][c] += k * u[j][c];
    }
    Mat congruent = mat_mul(mat_mul(u, a), transpose(u));
    Inertia got = inertia(congruent);
    CHECK(got.n_plus == base.n_plus);
    CHECK(got.n_zero == base.n_zero);
    CHECK(got.n_minus == base.n_minus);
  }
}

TEST_CASE("nonnegative measures give positive semidefinite moment matrices") {
  RandomGen gen(504);
  for (int trial = 0; trial < 10; ++trial) {
    AtomicMeasure2D mu = gen.measure(4, /*probability=*/true);
    ExponentTable mom = measure_moments(mu, 8);
    for (int order : {1, 2}) CHECK(inertia(moment_matrix(mom, order)).is_psd());
  }
}

TEST_CASE("moment matrix construction demands enough degree") {
  ExponentTable mom = measure_moments(cross_measure(), 4);
  CHECK_THROWS(moment_matrix(mom, 2));  // order 2 needs degree 8
}

TEST_CASE("divisibility probe on the cross measure") {
  ExponentTable mom = measure_moments(cross_measure(), 4);
  for (int n = 1; n <= 5; ++n) {
    InfdivReport rep = infdiv_probe(mom, n, 1);
    Rational nn(n);
    Rational expect = Rational(-1, 16) / nn - Rational(1, 16) / (nn * nn) +
                      Rational(1, 16) / (nn * nn * nn) +
                      Rational(1, 16) / (nn * nn * nn * nn);
    CHECK(rep.moments.get(2, 2) == expect);
    CHECK(rep.psd == (n == 1));
  }
  InfdivReport two = infdiv_probe(mom, 2, 1);
  REQUIRE(two.witness.has_value());
  CHECK(two.witness->find("-9/256") != std::string::npos);
  CHECK(two.moments.get(2, 2) == Rational(-9, 256));
}

TEST_CASE("product measures pass the divisibility probe") {
  AtomicMeasure2D bern;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1}) bern.atoms.push_back({sx, sy, Rational(1, 4)});
  ExponentTable mom = measure_moments(bern, 4);
  for (int n = 1; n <= 4; ++n) {
    InfdivReport rep = infdiv_probe(mom, n, 1);
    CHECK(rep.psd);
    CHECK_FALSE(rep.witness.has_value());
  }
}
