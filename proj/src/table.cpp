#include "bibool/table.hpp"

#include <algorithm>

namespace bibool {

std::string table_kind_name(TableKind k) {
  switch (k) {
    case TableKind::moments:
      return "moments";
    case TableKind::boolean_cum:
      return "boolean_cum";
    case TableKind::free_cum:
      return "free_cum";
    case TableKind::bifree_cum:
      return "bifree_cum";
    case TableKind::biboolean_cum:
      return "biboolean_cum";
    case TableKind::bifermi_cum:
      return "bifermi_cum";
  }
  throw std::logic_error("unknown table kind");
}

TableKind table_kind_from_name(const std::string& name) {
  for (TableKind k :
       {TableKind::moments, TableKind::boolean_cum, TableKind::free_cum,
        TableKind::bifree_cum, TableKind::biboolean_cum, TableKind::bifermi_cum})
    if (table_kind_name(k) == name) return k;
  throw std::invalid_argument("unknown table kind: " + name);
}

void AtomicMeasure2D::normalize() {
  std::map<std::pair<Rational, Rational>, Rational> merged;
  for (const auto& a : atoms) merged[{a.x, a.y}] += a.w;
  atoms.clear();
  for (auto& [xy, w] : merged)
    if (w != 0) atoms.push_back({xy.first, xy.second, w});
}

bool AtomicMeasure2D::is_probability() const {
  Rational total = 0;
  for (const auto& a : atoms) {
    if (a.w < 0) return false;
    total += a.w;
  }
  return total == 1;
}

ExponentTable measure_moments(const AtomicMeasure2D& mu, int degree) {
  ExponentTable t(TableKind::moments, degree);
  for (int m = 0; m <= degree; ++m)
    for (int n = 0; n + m <= degree; ++n) {
      if (m == 0 && n == 0) continue;
      Rational acc = 0;
      for (const auto& a : mu.atoms)
        acc += a.w * rational_pow(a.x, m) * rational_pow(a.y, n);
      t.set(m, n, acc);
    }
  return t;
}

AtomicMeasure2D dilate(const AtomicMeasure2D& mu, const Rational& lambda) {
  AtomicMeasure2D out = mu;
  for (auto& a : out.atoms) {
    a.x *= lambda;
    a.y *= lambda;
  }
  out.normalize();
  return out;
}

AtomicMeasure2D shift(const AtomicMeasure2D& mu, const Rational& dx,
                      const Rational& dy) {
  AtomicMeasure2D out = mu;
  for (auto& a : out.atoms) {
    a.x += dx;
    a.y += dy;
  }
  return out;
}

ExponentTable table_shift_moments(const ExponentTable& moments,
                                  const Rational& dx, const Rational& dy) {
  if (moments.kind != TableKind::moments)
    throw std::invalid_argument("table_shift_moments needs a moment table");
  ExponentTable out(TableKind::moments, moments.max_degree);
  for (int m = 0; m <= moments.max_degree; ++m)
    for (int n = 0; n + m <= moments.max_degree; ++n) {
      if (m == 0 && n == 0) continue;
      Rational acc = 0;
      for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j)
          acc += binomial(m, i) * binomial(n, j) * rational_pow(dx, m - i) *
                 rational_pow(dy, n - j) * moments.get(i, j);
      out.set(m, n, acc);
    }
  return out;
}

}  // namespace bibool
