#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bibool/json_io.hpp"
#include "bibool/random_gen.hpp"
#include "bibool/series.hpp"
#include "bibool/table.hpp"

using namespace bibool;

TEST_CASE("rational parse/format and arithmetic roundtrip") {
  CHECK(parse_rational("-1/8") == Rational(-1, 8));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(rational_to_string(Rational(-6, 4)) == "-3/2");
  CHECK(parse_rational("6/-4") == Rational(-3, 2));
  CHECK(rational_to_string(Rational(5)) == "5");
  CHECK_THROWS(parse_rational("1/0"));

  RandomGen gen(7);
  for (int i = 0; i < 200; ++i) {
    Rational a = gen.grid_rational(-20, 20, 9), b = gen.grid_rational(-20, 20, 9);
    CHECK((a + b) - b == a);
    if (b != 0) CHECK((a / b) * b == a);
  }
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(binomial(3, 5) == Rational(0));
  CHECK(rational_pow(Rational(-2, 3), 3) == Rational(-8, 27));
}

TEST_CASE("series multiplication examples") {
  TruncatedSeries2 f(4), g(4);
  f.set(0, 0, 1);
  f.set(1, 0, 1);  // 1 + z
  g.set(0, 0, 1);
  g.set(0, 1, 1);  // 1 + w
  TruncatedSeries2 h = series_mul(f, g);
  CHECK(h.get(0, 0) == 1);
  CHECK(h.get(1, 0) == 1);
  CHECK(h.get(0, 1) == 1);
  CHECK(h.get(1, 1) == 1);

  TruncatedSeries2 one = TruncatedSeries2::constant(4, 1);
  CHECK(series_mul(f, one) == f);
}

TEST_CASE("series inverse: geometric, identity, binomial") {
  const int N = 6;
  TruncatedSeries2 f(N);
  f.set(0, 0, 1);
  f.set(1, 0, -1);  // 1 - z
  TruncatedSeries2 inv = series_inverse(f);
  for (int k = 0; k <= N; ++k) CHECK(inv.get(k, 0) == 1);
  CHECK(series_mul(f, inv) == TruncatedSeries2::constant(N, 1));

  CHECK(series_inverse(TruncatedSeries2::constant(N, 1)) ==
        TruncatedSeries2::constant(N, 1));

  TruncatedSeries2 g(N);
  g.set(0, 0, 1);
  g.set(1, 0, -1);
  g.set(0, 1, -1);  // 1 - z - w
  TruncatedSeries2 ginv = series_inverse(g);
  for (int m = 0; m <= N; ++m)
    for (int n = 0; m + n <= N; ++n)
      CHECK(ginv.get(m, n) == binomial(m + n, m));
  CHECK(series_mul(g, ginv) == TruncatedSeries2::constant(N, 1));

  TruncatedSeries2 zero_const(N);
  CHECK_THROWS(series_inverse(zero_const));
}

TEST_CASE("series inverse roundtrip on random series") {
  RandomGen gen(11);
  for (int trial = 0; trial < 20; ++trial) {
    TruncatedSeries2 f(5);
    f.set(0, 0, 1);
    for (int m = 0; m <= 5; ++m)
      for (int n = 0; m + n <= 5; ++n)
        if (m + n >= 1) f.set(m, n, gen.grid_rational());
    CHECK(series_mul(f, series_inverse(f)) ==
          TruncatedSeries2::constant(5, 1));
  }
}

TEST_CASE("measure moments: two-point, origin, three-atom signed") {
  AtomicMeasure2D mu{{{1, 0, Rational(1, 2)}, {0, 1, Rational(1, 2)}}};
  ExponentTable t = measure_moments(mu, 6);
  for (int k = 1; k <= 6; ++k) {
    CHECK(t.get(k, 0) == Rational(1, 2));
    CHECK(t.get(0, k) == Rational(1, 2));
  }
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; m + n <= 6; ++n) CHECK(t.get(m, n) == 0);

  ExponentTable origin = measure_moments(AtomicMeasure2D::point_mass(0, 0), 4);
  CHECK(origin.entries.empty());

  AtomicMeasure2D tau{{{1, 1, 3}, {-1, 1, 3}, {1, -1, 3}}};
  ExponentTable tt = measure_moments(tau, 6);
  auto sign = [](int k) { return k % 2 == 0 ? 1 : -1; };
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; m + n <= 6; ++n) {
      if (m + n < 1) continue;
      CHECK(tt.get(m, n) == Rational(3 * (sign(m) + sign(n) + 1)));
    }
}

TEST_CASE("dilate and shift act on atoms") {
  AtomicMeasure2D d = dilate(AtomicMeasure2D::point_mass(1, 1), Rational(1, 2));
  REQUIRE(d.atoms.size() == 1);
  CHECK(d.atoms[0].x == Rational(1, 2));
  CHECK(d.atoms[0].y == Rational(1, 2));

  AtomicMeasure2D mu{{{1, 0, Rational(1, 2)}, {0, 1, Rational(1, 2)}}};
  AtomicMeasure2D s = shift(mu, Rational(-1, 2), Rational(-1, 2));
  REQUIRE(s.atoms.size() == 2);
  CHECK(s.atoms[0].x == Rational(1, 2));
  CHECK(s.atoms[0].y == Rational(-1, 2));
  CHECK(s.atoms[1].x == Rational(-1, 2));
  CHECK(s.atoms[1].y == Rational(1, 2));
}

TEST_CASE("dilation scaling law M(D_lambda mu) = lambda^(m+n) M(mu)") {
  RandomGen gen(23);
  for (Rational lambda : {Rational(-1), Rational(1, 2), Rational(3)}) {
    AtomicMeasure2D mu = gen.measure(3);
    ExponentTable base = measure_moments(mu, 6);
    ExponentTable scaled = measure_moments(dilate(mu, lambda), 6);
    for (int m = 0; m <= 6; ++m)
      for (int n = 0; m + n <= 6; ++n) {
        if (m + n < 1) continue;
        CHECK(scaled.get(m, n) == rational_pow(lambda, m + n) * base.get(m, n));
      }
  }
}

TEST_CASE("moments are linear and multiplicative on axis-product measures") {
  RandomGen gen(31);
  AtomicMeasure2D mu1 = gen.measure(3), mu2 = gen.measure(3);
  // linearity
  AtomicMeasure2D sum = mu1;
  sum.atoms.insert(sum.atoms.end(), mu2.atoms.begin(), mu2.atoms.end());
  sum.normalize();
  ExponentTable ts = measure_moments(sum, 5);
  ExponentTable t1 = measure_moments(mu1, 5), t2 = measure_moments(mu2, 5);
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; m + n <= 5; ++n)
      if (m + n >= 1) CHECK(ts.get(m, n) == t1.get(m, n) + t2.get(m, n));

  // product structure: mu1 on the x-axis times mu2 on the y-axis
  AtomicMeasure2D prod;
  for (const auto& a : mu1.atoms)
    for (const auto& b : mu2.atoms) prod.atoms.push_back({a.x, b.y, a.w * b.w});
  prod.normalize();
  AtomicMeasure2D x_only = mu1, y_only = mu2;
  for (auto& a : x_only.atoms) a.y = 0;
  for (auto& a : y_only.atoms) a.x = 0;
  x_only.normalize();
  y_only.normalize();
  ExponentTable tp = measure_moments(prod, 5);
  ExponentTable tx = measure_moments(x_only, 5), ty = measure_moments(y_only, 5);
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; m + n <= 5; ++n)
      CHECK(tp.get(m, n) == tx.get(m, 0) * ty.get(0, n));
}

TEST_CASE("table shift matches measure shift") {
  RandomGen gen(37);
  for (int trial = 0; trial < 10; ++trial) {
    // the binomial shift formula reads the implicit unit slot, so the
    // measure must have total mass 1
    AtomicMeasure2D mu = gen.measure(3, /*probability=*/true);
    Rational dx = gen.grid_rational(), dy = gen.grid_rational();
    CHECK(table_shift_moments(measure_moments(mu, 5), dx, dy) ==
          measure_moments(shift(mu, dx, dy), 5));
  }
}

TEST_CASE("expand_rational: geometric and scaled geometric") {
  RationalFunction2 geo =
      RationalFunction2::from_polys({{{0, 0}, 1}}, {{{0, 0}, 1}, {{1, 0}, -1}});
  TruncatedSeries2 s = expand_rational(geo, Substitution::none, 5);
  for (int k = 0; k <= 5; ++k) CHECK(s.get(k, 0) == 1);

  Rational lambda(2);
  RationalFunction2 lz = RationalFunction2::from_polys(
      {{{1, 0}, lambda}}, {{{0, 0}, 1}, {{1, 0}, -1}});
  TruncatedSeries2 sl = expand_rational(lz, Substitution::none, 5);
  CHECK(sl.get(0, 0) == 0);
  for (int k = 1; k <= 5; ++k) CHECK(sl.get(k, 0) == lambda);
}

TEST_CASE("json roundtrips for measures, tables, matrices") {
  RandomGen gen(41);
  AtomicMeasure2D mu = gen.measure(3);
  AtomicMeasure2D mu2 = measure_from_json(measure_to_json(mu));
  CHECK(measure_moments(mu2, 5) == measure_moments(mu, 5));

  ExponentTable t = gen.table(TableKind::moments, 5);
  CHECK(table_from_json(table_to_json(t)) == t);

  ExponentTable c = gen.table(TableKind::biboolean_cum, 4);
  CHECK(table_from_json(table_to_json(c)) == c);
}
