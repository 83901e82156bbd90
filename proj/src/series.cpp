#include "bibool/series.hpp"

#include <algorithm>
#include <sstream>

namespace bibool {

TruncatedSeries2 series_add(const TruncatedSeries2& f, const TruncatedSeries2& g) {
  if (f.max_degree != g.max_degree)
    throw std::invalid_argument("series degree mismatch");
  TruncatedSeries2 out = f;
  for (const auto& [mn, c] : g.coeffs) out.add(mn.first, mn.second, c);
  return out;
}

TruncatedSeries2 series_sub(const TruncatedSeries2& f, const TruncatedSeries2& g) {
  return series_add(f, series_scale(g, Rational(-1)));
}

TruncatedSeries2 series_scale(const TruncatedSeries2& f, const Rational& c) {
  TruncatedSeries2 out(f.max_degree);
  if (c == 0) return out;
  for (const auto& [mn, v] : f.coeffs) out.set(mn.first, mn.second, v * c);
  return out;
}

TruncatedSeries2 series_mul(const TruncatedSeries2& f, const TruncatedSeries2& g) {
  if (f.max_degree != g.max_degree)
    throw std::invalid_argument("series degree mismatch");
  TruncatedSeries2 out(f.max_degree);
  for (const auto& [a, ca] : f.coeffs)
    for (const auto& [b, cb] : g.coeffs) {
      int m = a.first + b.first, n = a.second + b.second;
      if (m + n <= out.max_degree) out.add(m, n, ca * cb);
    }
  return out;
}

TruncatedSeries2 series_inverse(const TruncatedSeries2& f) {
  Rational c0 = f.get(0, 0);
  if (c0 == 0) throw std::domain_error("series with zero constant term");
  int N = f.max_degree;
  TruncatedSeries2 inv(N);
  inv.set(0, 0, Rational(1) / c0);
  // solve degree by degree: sum_{a+b=(m,n)} f_a inv_b = [(m,n)==0]
  for (int d = 1; d <= N; ++d)
    for (int m = 0; m <= d; ++m) {
      int n = d - m;
      Rational acc = 0;
      for (const auto& [a, ca] : f.coeffs) {
        if (a.first == 0 && a.second == 0) continue;
        if (a.first <= m && a.second <= n)
          acc += ca * inv.get(m - a.first, n - a.second);
      }
      if (acc != 0) inv.set(m, n, -acc / c0);
    }
  return inv;
}

TruncatedSeries2 series_shift(const TruncatedSeries2& f, int dm, int dn) {
  TruncatedSeries2 out(f.max_degree);
  for (const auto& [mn, c] : f.coeffs) {
    int m = mn.first + dm, n = mn.second + dn;
    if (m >= 0 && n >= 0 && m + n <= out.max_degree) out.set(m, n, c);
  }
  return out;
}

std::string series_to_string(const TruncatedSeries2& f, const std::string& zname,
                             const std::string& wname) {
  if (f.coeffs.empty()) return "0";
  // sort by total degree, then by z-exponent
  std::vector<std::pair<std::pair<int, int>, Rational>> terms(f.coeffs.begin(),
                                                              f.coeffs.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da < db;
    return a.first.first < b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [mn, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << rational_to_string(c);
    if (mn.first > 0) {
      os << " " << zname;
      if (mn.first > 1) os << "^" << mn.first;
    }
    if (mn.second > 0) {
      os << " " << wname;
      if (mn.second > 1) os << "^" << mn.second;
    }
  }
  return os.str();
}

TruncatedSeries2 moment_series(const ExponentTable& moments, int degree) {
  if (moments.kind != TableKind::moments)
    throw std::invalid_argument("moment_series needs a moment table");
  if (degree > moments.max_degree)
    throw std::invalid_argument("moment_series degree exceeds table degree");
  TruncatedSeries2 s(degree);
  s.set(0, 0, Rational(1));
  for (const auto& [mn, v] : moments.entries)
    if (mn.first + mn.second <= degree) s.set(mn.first, mn.second, v);
  return s;
}

RationalFunction2 RationalFunction2::from_polys(Poly num, Poly den) {
  auto prune = [](Poly& p) {
    for (auto it = p.begin(); it != p.end();)
      it = (it->second == 0) ? p.erase(it) : std::next(it);
  };
  prune(num);
  prune(den);
  if (den.empty()) throw std::invalid_argument("zero denominator polynomial");
  return RationalFunction2{std::move(num), std::move(den)};
}

TruncatedSeries2 expand_rational(const RationalFunction2& rf, Substitution sub,
                                 int degree) {
  RationalFunction2::Poly num = rf.num, den = rf.den;
  if (sub == Substitution::reciprocal_zw) {
    // multiply numerator and denominator by z^Mz w^Mw after z->1/z, w->1/w:
    // the term c z^a w^b becomes c z^(Mz-a) w^(Mw-b)
    int Mz = 0, Mw = 0;
    for (const auto* p : {&num, &den})
      for (const auto& [mn, _] : *p) {
        Mz = std::max(Mz, mn.first);
        Mw = std::max(Mw, mn.second);
      }
    auto flip = [&](const RationalFunction2::Poly& p) {
      RationalFunction2::Poly out;
      for (const auto& [mn, c] : p) out[{Mz - mn.first, Mw - mn.second}] = c;
      return out;
    };
    num = flip(num);
    den = flip(den);
  }
  auto to_series = [&](const RationalFunction2::Poly& p) {
    TruncatedSeries2 s(degree);
    for (const auto& [mn, c] : p)
      if (mn.first + mn.second <= degree) s.add(mn.first, mn.second, c);
    return s;
  };
  TruncatedSeries2 den_s = to_series(den);
  if (den_s.get(0, 0) == 0)
    throw std::domain_error(
        "denominator has zero constant term after substitution");
  return series_mul(to_series(num), series_inverse(den_s));
}

}  // namespace bibool
