#pragma once

#include <functional>

#include "bibool/cumulants.hpp"
#include "bibool/distribution.hpp"

namespace bibool {

// Series in non-commuting indeterminates indexed by the alphabet, with zero
// constant term, truncated at max_degree.
struct NcSeries {
  Alphabet alphabet;
  int max_degree = 0;
  std::map<Word, Rational> coeffs;

  Rational get(const Word& w) const {
    auto it = coeffs.find(w);
    return it == coeffs.end() ? Rational(0) : it->second;
  }
  void set(const Word& w, Rational v) {
    if (w.empty() || static_cast<int>(w.size()) > max_degree)
      throw std::out_of_range("bad word length in NcSeries");
    if (v == 0)
      coeffs.erase(w);
    else
      coeffs[w] = std::move(v);
  }
  bool operator==(const NcSeries& o) const {
    return max_degree == o.max_degree && coeffs == o.coeffs;
  }

  // Product over the blocks of pi of the coefficients of the subwords.
  Rational coeff_partition(const Word& w, const Partition& pi) const;
};

// Enumerate every word over the alphabet with length 1..max_len.
void for_each_alphabet_word(const Alphabet& a, int max_len,
                            const std::function<void(const Word&)>& fn);

// Moment series from a cumulant series over the family's partition sum, and
// its inverse (recursive subtraction of non-maximal partitions).
NcSeries nc_moments_from_cumulants(const NcSeries& cum, Family fam);
NcSeries nc_cumulants_from_moments(const NcSeries& mom, Family fam);

// The three series of one distribution: moments, bi-free R-coefficients,
// bi-Boolean eta-coefficients.
struct SeriesTriple {
  NcSeries m, r, eta;

  static SeriesTriple from_distribution(const TwoFacedDistribution& dist);
  static SeriesTriple from_moment_series(const NcSeries& m);
};

// Twisted boxed convolution on series: the coefficient of each word is the
// sum over bi-non-crossing partitions of Cf_pi(f) * Cf_{K(pi)}(g).
NcSeries twisted_star(const NcSeries& f, const NcSeries& g);

// eta after R-inverse: turns bi-free R-coefficients into bi-Boolean
// eta-coefficients. Computed both by composing the conversion maps and by
// the direct sum over pi << 1_chi; the two are asserted equal.
NcSeries breta(const NcSeries& f);
// The inverse map, likewise computed two ways and cross-checked.
NcSeries breta_inverse(const NcSeries& g);

}  // namespace bibool
