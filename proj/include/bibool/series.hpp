#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "bibool/rational.hpp"
#include "bibool/table.hpp"

namespace bibool {

// Commutative bivariate power series truncated at total degree max_degree.
struct TruncatedSeries2 {
  int max_degree = 0;
  std::map<std::pair<int, int>, Rational> coeffs;

  TruncatedSeries2() = default;
  explicit TruncatedSeries2(int degree) : max_degree(degree) {
    if (degree < 0) throw std::invalid_argument("series degree must be >= 0");
  }

  Rational get(int m, int n) const {
    auto it = coeffs.find({m, n});
    return it == coeffs.end() ? Rational(0) : it->second;
  }
  void set(int m, int n, Rational v) {
    if (m < 0 || n < 0 || m + n > max_degree)
      throw std::out_of_range("series index out of range");
    if (v == 0)
      coeffs.erase({m, n});
    else
      coeffs[{m, n}] = std::move(v);
  }
  void add(int m, int n, const Rational& v) { set(m, n, get(m, n) + v); }

  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const TruncatedSeries2& o) const {
    return max_degree == o.max_degree && coeffs == o.coeffs;
  }

  static TruncatedSeries2 constant(int degree, const Rational& c) {
    TruncatedSeries2 s(degree);
    s.set(0, 0, c);
    return s;
  }
};

TruncatedSeries2 series_add(const TruncatedSeries2& f, const TruncatedSeries2& g);
TruncatedSeries2 series_sub(const TruncatedSeries2& f, const TruncatedSeries2& g);
TruncatedSeries2 series_scale(const TruncatedSeries2& f, const Rational& c);
TruncatedSeries2 series_mul(const TruncatedSeries2& f, const TruncatedSeries2& g);
// Requires nonzero constant term; f * result == 1 up to the degree.
TruncatedSeries2 series_inverse(const TruncatedSeries2& f);

// Multiply by the monomial z^dm w^dn, dropping coefficients pushed past the
// truncation degree. Negative shifts drop coefficients that would go below
// exponent zero (used for the (1/z)-style prefactors of the combination
// theorems, all of whose applications are exact).
TruncatedSeries2 series_shift(const TruncatedSeries2& f, int dm, int dn);

std::string series_to_string(const TruncatedSeries2& f, const std::string& zname = "z",
                             const std::string& wname = "w");

// Moment generating series M(z,w) = sum M_{m,n} z^m w^n with M_{0,0} = 1.
TruncatedSeries2 moment_series(const ExponentTable& moments, int degree);

// Bivariate rational function; expand() gives its exact power-series
// expansion, optionally after the substitution z -> 1/z, w -> 1/w (performed
// symbolically by clearing denominators, so only nonnegative powers remain).
struct RationalFunction2 {
  // polynomial: exponent pair -> coefficient
  using Poly = std::map<std::pair<int, int>, Rational>;
  Poly num, den;

  static RationalFunction2 from_polys(Poly num, Poly den);
};

enum class Substitution { none, reciprocal_zw };

TruncatedSeries2 expand_rational(const RationalFunction2& rf, Substitution sub,
                                 int degree);

}  // namespace bibool
