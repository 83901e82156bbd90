#include "bibool/positivity.hpp"

#include "bibool/cumulants.hpp"

#include <stdexcept>

namespace bibool {

MomentMatrix moment_matrix(const ExponentTable& moments, int order) {
  if (moments.kind != TableKind::moments)
    throw std::invalid_argument("moment_matrix needs a moment table");
  if (moments.max_degree < 4 * order)
    throw std::invalid_argument("moment table degree too small for this order");
  MomentMatrix out;
  out.order = order;
  for (int i2 = 0; i2 <= order; ++i2)
    for (int i1 = 0; i1 <= order; ++i1) out.index.emplace_back(i1, i2);
  int d = static_cast<int>(out.index.size());
  out.rows.assign(d, std::vector<Rational>(d));
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      out.rows[r][c] = moments.get(out.index[r].first + out.index[c].first,
                                   out.index[r].second + out.index[c].second);
  return out;
}

Rational determinant(std::vector<std::vector<Rational>> a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return Rational(1);
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("determinant needs a square matrix");
  // Bareiss fraction-free elimination (exact over any integral domain;
  // rationals included)
  Rational prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return Rational(0);
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Rational determinant(const MomentMatrix& m) { return determinant(m.rows); }

Inertia inertia(std::vector<std::vector<Rational>> a) {
  int n = static_cast<int>(a.size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("inertia needs a square matrix");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a[i][j] != a[j][i])
        throw std::invalid_argument("inertia needs a symmetric matrix");

  Inertia out;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      // try a diagonal pivot further down (congruence by permutation)
      int d = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][i] != 0) {
          d = i;
          break;
        }
      if (d >= 0) {
        std::swap(a[k], a[d]);
        for (int i = 0; i < n; ++i) std::swap(a[i][k], a[i][d]);
      } else {
        // all remaining diagonal entries vanish; symmetrize an off-diagonal
        // pivot by adding row/column j to row/column k
        int j = -1;
        for (int c = k + 1; c < n && j < 0; ++c)
          if (a[k][c] != 0) j = c;
        if (j < 0) {
          // row k (and column k) vanish on the remaining block
          ++out.n_zero;
          continue;
        }
        for (int c = 0; c < n; ++c) a[k][c] += a[j][c];
        for (int r = 0; r < n; ++r) a[r][k] += a[r][j];
      }
    }
    Rational pivot = a[k][k];
    if (pivot > 0)
      ++out.n_plus;
    else
      ++out.n_minus;
    for (int i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rational f = a[i][k] / pivot;
      // congruence by I - f e_i e_k^T: row op, then the mirrored column op
      for (int j = 0; j < n; ++j) a[i][j] -= f * a[k][j];
      for (int j = 0; j < n; ++j) a[j][i] -= f * a[j][k];
    }
  }
  return out;
}

Inertia inertia(const MomentMatrix& m) { return inertia(m.rows); }

InfdivReport infdiv_probe(const ExponentTable& moments, int n, int order) {
  if (n < 1) throw std::invalid_argument("divisor must be >= 1");
  ExponentTable cum = moments_to_cumulants(moments, TableKind::biboolean_cum);
  for (auto& [_, v] : cum.entries) v /= n;
  InfdivReport report;
  report.moments = cumulants_to_moments(cum);
  MomentMatrix x = moment_matrix(report.moments, order);
  report.psd = inertia(x).is_psd();
  if (!report.psd) {
    // prefer an even-exponent moment gone negative (a diagonal entry of X)
    for (int d = 0; d < x.dim(); ++d) {
      auto [i1, i2] = x.index[d];
      if (x.rows[d][d] < 0) {
        report.witness = "M_{" + std::to_string(2 * i1) + "," +
                         std::to_string(2 * i2) +
                         "} = " + rational_to_string(x.rows[d][d]) + " < 0";
        break;
      }
    }
    if (!report.witness)
      report.witness = "moment matrix has a negative congruence pivot";
  }
  return report;
}

}  // namespace bibool
