#pragma once

#include "bibool/distribution.hpp"
#include "bibool/partition.hpp"
#include "bibool/table.hpp"

namespace bibool {

// Partition family underlying each cumulant kind.
Family family_for_kind(TableKind kind);

// Uniform conversion scheme: the moment of a^m b^n is the sum over the
// family of chi_{m,n} of products of block cumulants indexed by the block's
// (left count, right count). moments_to_cumulants peels off the one-block
// term recursively; the two maps are exact inverses for every kind.
ExponentTable moments_to_cumulants(const ExponentTable& moments, TableKind kind);
ExponentTable cumulants_to_moments(const ExponentTable& cumulants);

enum class WordCumulantKind { biboolean, bifree };

// B_chi (Moebius sum over BI) or kappa_chi (Moebius sum over BNC) of the
// word's letters in dist.
Rational word_cumulant(const TwoFacedDistribution& dist, const Word& word,
                       WordCumulantKind kind);

// Two-state cumulant: phi(word) = sum over BNC(chi) of products of
// kappa(psi) over interior blocks and of these cumulants over exterior
// blocks; solved recursively for the one-block term.
Rational c_blr_cumulant(const TwoFacedDistribution& phi_dist,
                        const TwoFacedDistribution& psi_dist, const Word& word);

enum class Side { left, right };

// Cumulant table of (1 + a, b) (or (a, 1 + b)) from the table of (a, b).
// Mixed rows follow the binomial formula
//   B_{m,n}(1+a,b) = sum_{i=0}^{m-1} C(m-1,i) B_{i+1,n}(a,b)   (n >= 1);
// the pure-left row is the one-variable Boolean shift
//   B_{1,0} += 1,  B_{m,0}(1+a) = sum_{i=0}^{m-2} C(m-2,i) B_{i+2,0}(a).
ExponentTable affine_shift_cumulants(const ExponentTable& biboolean_cum,
                                     Side side);

}  // namespace bibool
