#include "bibool/transforms.hpp"

#include "bibool/products.hpp"

#include <stdexcept>

namespace bibool {

namespace {

ExponentTable truncate_table(const ExponentTable& t, int degree) {
  if (degree > t.max_degree)
    throw std::invalid_argument("cannot extend a table's degree");
  ExponentTable out(t.kind, degree);
  for (const auto& [mn, v] : t.entries)
    if (mn.first + mn.second <= degree) out.set(mn.first, mn.second, v);
  return out;
}

}  // namespace

TruncatedSeries2 eta_from_cumulants(const ExponentTable& cum, int degree) {
  if (cum.kind != TableKind::biboolean_cum)
    throw std::invalid_argument("eta needs bi-Boolean cumulants");
  TruncatedSeries2 s(degree);
  for (const auto& [mn, v] : cum.entries)
    if (mn.first + mn.second <= degree) s.set(mn.first, mn.second, v);
  return s;
}

TruncatedSeries2 eta_series(const ExponentTable& moments, int degree) {
  return eta_from_cumulants(
      moments_to_cumulants(truncate_table(moments, degree),
                           TableKind::biboolean_cum),
      degree);
}

TruncatedSeries2 eta_reduced(const TruncatedSeries2& eta) {
  TruncatedSeries2 out(eta.max_degree);
  for (const auto& [mn, v] : eta.coeffs)
    if (mn.first >= 1 && mn.second >= 1) out.set(mn.first, mn.second, v);
  return out;
}

TruncatedSeries2 eta_marginal(const TruncatedSeries2& eta, Side side) {
  TruncatedSeries2 out(eta.max_degree);
  for (const auto& [mn, v] : eta.coeffs) {
    if (side == Side::left && mn.second == 0) out.set(mn.first, 0, v);
    if (side == Side::right && mn.first == 0) out.set(0, mn.second, v);
  }
  return out;
}

TruncatedSeries2 verify_partial_eta(const ExponentTable& moments, int degree) {
  ExponentTable t = truncate_table(moments, degree);
  TruncatedSeries2 eta = eta_series(t, degree);
  TruncatedSeries2 m = moment_series(t, degree);
  TruncatedSeries2 ma(degree), mb(degree);
  ma.set(0, 0, Rational(1));
  mb.set(0, 0, Rational(1));
  for (int k = 1; k <= degree; ++k) {
    ma.set(k, 0, t.get(k, 0));
    mb.set(0, k, t.get(0, k));
  }
  TruncatedSeries2 rhs = series_add(eta_marginal(eta, Side::left),
                                    eta_marginal(eta, Side::right));
  rhs = series_add(
      rhs, series_mul(m, series_inverse(series_mul(ma, mb))));
  rhs = series_sub(rhs, TruncatedSeries2::constant(degree, Rational(1)));
  return series_sub(eta, rhs);
}

TruncatedSeries2 self_energy_series(const ExponentTable& moments, int degree) {
  return eta_series(moments, degree);
}

TruncatedSeries2 check_mult_add_theorems(const ExponentTable& mu1,
                                         const ExponentTable& mu2,
                                         CombinationTheorem which, int degree) {
  const int carrier = 2 * degree + 2;
  if (mu1.max_degree < carrier || mu2.max_degree < carrier)
    throw std::invalid_argument(
        "combination-theorem check needs input tables of degree 2N+2");
  TwoFacedDistribution d1 =
      pair_distribution(truncate_table(mu1, carrier), "a1", "b1");
  TwoFacedDistribution d2 =
      pair_distribution(truncate_table(mu2, carrier), "a2", "b2");
  TwoFacedDistribution prod = biboolean_product({d1, d2});

  auto eta_tilde_of_table = [&](const ExponentTable& cum) {
    return eta_reduced(eta_from_cumulants(cum, degree));
  };
  // (1/z) eta_{1+a}(z) read off a shifted cumulant table's pure-left row
  auto left_prefactor = [&](const ExponentTable& shifted) {
    TruncatedSeries2 p(degree);
    for (int m = 1; m <= degree; ++m) p.set(m - 1, 0, shifted.get(m, 0));
    return p;
  };
  auto right_prefactor = [&](const ExponentTable& shifted) {
    TruncatedSeries2 p(degree);
    for (int n = 1; n <= degree; ++n) p.set(0, n - 1, shifted.get(0, n));
    return p;
  };

  ExponentTable b1 = moments_to_cumulants(truncate_table(mu1, degree),
                                          TableKind::biboolean_cum);
  ExponentTable b2 = moments_to_cumulants(truncate_table(mu2, degree),
                                          TableKind::biboolean_cum);

  std::string left_expr = "(1+a1)*(1+a2)";
  std::string right_expr;
  TruncatedSeries2 rhs(degree);
  switch (which) {
    case CombinationTheorem::T: {
      right_expr = "b1+b2";
      ExponentTable s1 = affine_shift_cumulants(b1, Side::left);
      ExponentTable s2 = affine_shift_cumulants(b2, Side::left);
      rhs = series_add(eta_tilde_of_table(s1),
                       series_mul(left_prefactor(s1), eta_tilde_of_table(s2)));
      break;
    }
    case CombinationTheorem::S: {
      right_expr = "(1+b2)*(1+b1)";
      ExponentTable s1 = affine_shift_cumulants(
          affine_shift_cumulants(b1, Side::left), Side::right);
      ExponentTable s2 = affine_shift_cumulants(
          affine_shift_cumulants(b2, Side::left), Side::right);
      rhs = series_add(
          series_mul(left_prefactor(s1), eta_tilde_of_table(s2)),
          series_mul(right_prefactor(s2), eta_tilde_of_table(s1)));
      break;
    }
    case CombinationTheorem::S2: {
      right_expr = "(1+b1)*(1+b2)";
      ExponentTable s1 = affine_shift_cumulants(
          affine_shift_cumulants(b1, Side::left), Side::right);
      ExponentTable s2 = affine_shift_cumulants(
          affine_shift_cumulants(b2, Side::left), Side::right);
      rhs = series_add(
          eta_tilde_of_table(s1),
          series_mul(series_mul(left_prefactor(s1), right_prefactor(s1)),
                     eta_tilde_of_table(s2)));
      break;
    }
  }

  ExponentTable lhs_tab =
      extract_pair(prod, parse_word_expr(left_expr, prod.alphabet),
                   parse_word_expr(right_expr, prod.alphabet), degree);
  TruncatedSeries2 lhs = eta_reduced(eta_series(lhs_tab, degree));
  return series_sub(lhs, rhs);
}

ExponentTable compound_poisson_table(const Rational& lambda,
                                     const AtomicMeasure2D& sigma,
                                     ConvolutionKind kind, int degree) {
  if (kind == ConvolutionKind::bifree)
    throw std::invalid_argument(
        "compound_poisson_table supports biboolean and bifermi kinds");
  ExponentTable sig_moments = measure_moments(sigma, degree);
  if (sig_moments.entries.empty())
    throw std::invalid_argument(
        "jump measure must differ from the point mass at the origin");
  TableKind ck = kind == ConvolutionKind::biboolean ? TableKind::biboolean_cum
                                                    : TableKind::bifermi_cum;
  ExponentTable cum(ck, degree);
  for (const auto& [mn, v] : sig_moments.entries)
    cum.set(mn.first, mn.second, lambda * v);
  return cumulants_to_moments(cum);
}

TruncatedSeries2 bifermi_H_series(const AtomicMeasure2D& mu, int degree) {
  ExponentTable gamma = moments_to_cumulants(measure_moments(mu, degree),
                                             TableKind::bifermi_cum);
  TruncatedSeries2 s(degree);
  for (const auto& [mn, v] : gamma.entries) s.set(mn.first, mn.second, v);
  return s;
}

}  // namespace bibool
