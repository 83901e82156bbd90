#pragma once

#include <vector>

#include "bibool/distribution.hpp"

namespace bibool {

// Joint distribution of bi-Boolean independent components: every word's
// moment factors over the maximal bi-interval partition refining the
// coloring by component.
TwoFacedDistribution biboolean_product(
    const std::vector<TwoFacedDistribution>& components);

// Joint distribution of bi-free components, via the combinatorial moment
// formula: phi(word) = sum over bi-non-crossing pi refining the component
// coloring of [ sum_{pi <= sigma <= coloring} mu_BNC(pi, sigma) ] times the
// product of component moments over the blocks of pi.
TwoFacedDistribution bifree_product(
    const std::vector<TwoFacedDistribution>& components);

}  // namespace bibool
