#include "bibool/convolutions.hpp"

#include <stdexcept>

namespace bibool {

namespace {

TableKind cum_kind(ConvolutionKind k) {
  switch (k) {
    case ConvolutionKind::biboolean:
      return TableKind::biboolean_cum;
    case ConvolutionKind::bifree:
      return TableKind::bifree_cum;
    case ConvolutionKind::bifermi:
      return TableKind::bifermi_cum;
  }
  throw std::logic_error("unknown convolution kind");
}

}  // namespace

ExponentTable additive_convolve(const ExponentTable& mu, const ExponentTable& nu,
                                ConvolutionKind kind) {
  if (mu.max_degree != nu.max_degree)
    throw std::invalid_argument("additive_convolve: degree mismatch");
  TableKind ck = cum_kind(kind);
  ExponentTable a = moments_to_cumulants(mu, ck);
  ExponentTable b = moments_to_cumulants(nu, ck);
  for (const auto& [mn, v] : b.entries)
    a.set(mn.first, mn.second, a.get(mn.first, mn.second) + v);
  return cumulants_to_moments(a);
}

TwoFacedDistribution additive_convolve(const TwoFacedDistribution& mu,
                                       const TwoFacedDistribution& nu,
                                       ConvolutionKind kind) {
  if (!(mu.alphabet.left == nu.alphabet.left &&
        mu.alphabet.right == nu.alphabet.right &&
        mu.max_degree == nu.max_degree))
    throw std::invalid_argument("additive_convolve: shape mismatch");
  Family fam;
  WordCumulantKind wk;
  switch (kind) {
    case ConvolutionKind::biboolean:
      fam = Family::BI;
      wk = WordCumulantKind::biboolean;
      break;
    case ConvolutionKind::bifree:
      fam = Family::BNC;
      wk = WordCumulantKind::bifree;
      break;
    default:
      throw std::invalid_argument(
          "word-level additive convolution supports biboolean and bifree");
  }
  NcSeries cum;
  cum.alphabet = mu.alphabet;
  cum.max_degree = mu.max_degree;
  for_each_alphabet_word(mu.alphabet, mu.max_degree, [&](const Word& w) {
    Rational v = word_cumulant(mu, w, wk) + word_cumulant(nu, w, wk);
    if (v != 0) cum.set(w, v);
  });
  NcSeries mom = nc_moments_from_cumulants(cum, fam);
  TwoFacedDistribution out;
  out.alphabet = mu.alphabet;
  out.max_degree = mu.max_degree;
  for (const auto& [w, v] : mom.coeffs) out.set(w, v);
  return out;
}

ExponentTable bifermi_convolve_via_shift(const AtomicMeasure2D& mu,
                                         const AtomicMeasure2D& nu, int degree) {
  auto mean = [](const AtomicMeasure2D& m) {
    Rational mx = 0, my = 0;
    for (const auto& a : m.atoms) {
      mx += a.w * a.x;
      my += a.w * a.y;
    }
    return std::make_pair(mx, my);
  };
  auto [mx1, my1] = mean(mu);
  auto [mx2, my2] = mean(nu);
  ExponentTable centered = additive_convolve(
      measure_moments(shift(mu, -mx1, -my1), degree),
      measure_moments(shift(nu, -mx2, -my2), degree), ConvolutionKind::biboolean);
  return table_shift_moments(centered, mx1 + mx2, my1 + my2);
}

TwoFacedDistribution twisted_mult_convolve(const TwoFacedDistribution& mu,
                                           const TwoFacedDistribution& nu) {
  SeriesTriple a = SeriesTriple::from_distribution(mu);
  SeriesTriple b = SeriesTriple::from_distribution(nu);
  NcSeries r = twisted_star(a.r, b.r);
  NcSeries mom = nc_moments_from_cumulants(r, Family::BNC);
  TwoFacedDistribution out;
  out.alphabet = mu.alphabet;
  out.max_degree = mu.max_degree;
  for (const auto& [w, v] : mom.coeffs) out.set(w, v);
  return out;
}

ExponentTable bb_bijection(const ExponentTable& moments) {
  ExponentTable b = moments_to_cumulants(moments, TableKind::biboolean_cum);
  ExponentTable kappa(TableKind::bifree_cum, b.max_degree);
  kappa.entries = b.entries;
  return cumulants_to_moments(kappa);
}

TwoFacedDistribution bb_bijection(const TwoFacedDistribution& dist) {
  SeriesTriple t = SeriesTriple::from_distribution(dist);
  // the eta-coefficients become the R-coefficients of the image
  NcSeries mom = nc_moments_from_cumulants(t.eta, Family::BNC);
  TwoFacedDistribution out;
  out.alphabet = dist.alphabet;
  out.max_degree = dist.max_degree;
  for (const auto& [w, v] : mom.coeffs) out.set(w, v);
  return out;
}

}  // namespace bibool
