#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bibool/table.hpp"

namespace bibool {

// Gram-type matrix of mixed moments, indexed by exponent pairs (i1,i2) with
// 0 <= i1,i2 <= order, in colex order ((0,0),(1,0),...,(order,0),(0,1),...).
// entry[(i1,i2),(j1,j2)] = M_{i1+j1, i2+j2}.
struct MomentMatrix {
  int order = 0;
  std::vector<std::pair<int, int>> index;
  std::vector<std::vector<Rational>> rows;

  int dim() const { return static_cast<int>(rows.size()); }
};

MomentMatrix moment_matrix(const ExponentTable& moments, int order);

// Exact determinant via fraction-free (Bareiss) elimination.
Rational determinant(const MomentMatrix& m);
Rational determinant(std::vector<std::vector<Rational>> a);

struct Inertia {
  int n_plus = 0, n_zero = 0, n_minus = 0;
  bool is_psd() const { return n_minus == 0; }
};

// Signature by exact symmetric congruence diagonalization (Lagrange
// reduction; an off-diagonal pivot is symmetrized by a row+column addition).
Inertia inertia(const MomentMatrix& m);
Inertia inertia(std::vector<std::vector<Rational>> a);

struct InfdivReport {
  ExponentTable moments;  // moments of the n-th convolution root candidate
  bool psd = false;
  // e.g. "M_{2,2} = -9/256 < 0" or "inertia has a negative pivot"
  std::optional<std::string> witness;
};

// Scales the bi-Boolean cumulants of t by 1/n, rebuilds moments, and reports
// the moment-matrix positivity of the candidate n-th root at the given order.
InfdivReport infdiv_probe(const ExponentTable& moments, int n, int order);

}  // namespace bibool
