#pragma once

#include "bibool/cumulants.hpp"
#include "bibool/ncseries.hpp"
#include "bibool/table.hpp"

namespace bibool {

enum class ConvolutionKind { biboolean, bifree, bifermi };

// Additive convolution on moment tables: convert to the kind's cumulants,
// add, convert back.
ExponentTable additive_convolve(const ExponentTable& mu, const ExponentTable& nu,
                                ConvolutionKind kind);

// Additive convolution at the word level (biboolean or bifree): word
// cumulants of the result are the sums of the inputs' word cumulants over a
// shared alphabet.
TwoFacedDistribution additive_convolve(const TwoFacedDistribution& mu,
                                       const TwoFacedDistribution& nu,
                                       ConvolutionKind kind);

// Additive bi-Fermi convolution of measures through the mean-shift recipe:
// shift both inputs to zero mean, bi-Boolean convolve, translate back by the
// summed means.
ExponentTable bifermi_convolve_via_shift(const AtomicMeasure2D& mu,
                                         const AtomicMeasure2D& nu, int degree);

// Twisted multiplicative bi-free convolution: R-series of the result is
// R_mu (twisted-star) R_nu.
TwoFacedDistribution twisted_mult_convolve(const TwoFacedDistribution& mu,
                                           const TwoFacedDistribution& nu);

// The Bercovici--Pata-type bijection: the output's bi-free cumulants equal
// the input's bi-Boolean cumulants.
ExponentTable bb_bijection(const ExponentTable& moments);
TwoFacedDistribution bb_bijection(const TwoFacedDistribution& dist);

}  // namespace bibool
