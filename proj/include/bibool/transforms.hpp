#pragma once

#include "bibool/convolutions.hpp"
#include "bibool/cumulants.hpp"
#include "bibool/series.hpp"
#include "bibool/table.hpp"

namespace bibool {

// eta(z,w) = sum of bi-Boolean cumulants B_{m,n} z^m w^n, m+n >= 1.
TruncatedSeries2 eta_series(const ExponentTable& moments, int degree);
TruncatedSeries2 eta_from_cumulants(const ExponentTable& biboolean_cum,
                                    int degree);
// Drop the pure-z and pure-w rows (keep m,n >= 1 only).
TruncatedSeries2 eta_reduced(const TruncatedSeries2& eta);
// Keep only the pure-z row (side == left) or pure-w row (side == right).
TruncatedSeries2 eta_marginal(const TruncatedSeries2& eta, Side side);

// Residual of the partial-eta functional equation
//   eta = eta_a + eta_b + M/(M_a M_b) - 1;
// identically zero for every genuine moment table.
TruncatedSeries2 verify_partial_eta(const ExponentTable& moments, int degree);

// Self-energy E(u,v) = eta evaluated at u = 1/z, v = 1/w; as formal series
// the coefficients coincide with eta's, read in the reciprocal variables.
TruncatedSeries2 self_energy_series(const ExponentTable& moments, int degree);

enum class CombinationTheorem { T, S, S2 };

// Residual of the reduced-eta combination theorem `which` for the two
// commuting pairs with moment tables mu1, mu2 (bi-Boolean independent):
//   T : eta~ of ((1+a1)(1+a2), b1+b2)
//         = eta~(1+a1,b1) + (1/z) eta_{1+a1}(z) eta~(1+a2,b2)
//   S : eta~ of ((1+a1)(1+a2), (1+b2)(1+b1))
//         = (1/z) eta_{1+a1}(z) eta~(1+a2,1+b2)
//         + (1/w) eta_{1+b2}(w) eta~(1+a1,1+b1)
//   S2: eta~ of ((1+a1)(1+a2), (1+b1)(1+b2))
//         = eta~(1+a1,1+b1)
//         + (1/(zw)) eta_{1+a1}(z) eta_{1+b1}(w) eta~(1+a2,1+b2)
// The left side is computed from the product distribution at carrier degree
// 2*degree + 2; the right from affine-shifted component cumulant tables.
TruncatedSeries2 check_mult_add_theorems(const ExponentTable& mu1,
                                         const ExponentTable& mu2,
                                         CombinationTheorem which, int degree);

// Moment table of the compound Poisson law with rate lambda and jump
// measure sigma: all cumulants of the chosen kind equal lambda * M_{m,n}(sigma).
ExponentTable compound_poisson_table(const Rational& lambda,
                                     const AtomicMeasure2D& sigma,
                                     ConvolutionKind kind, int degree);

// H(z,w) = sum of bi-Fermi cumulants gamma_{m,n} z^m w^n.
TruncatedSeries2 bifermi_H_series(const AtomicMeasure2D& mu, int degree);

}  // namespace bibool
